use std::fmt;
use std::sync::Arc;

use super::AlgebraError;

/// Ordered, duplicate-free list of variable names. The position of a name is
/// its index in every exponent vector built over this context.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VariableContext {
    names: Vec<String>,
}

impl VariableContext {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Arc<Self>, AlgebraError> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        for (i, n) in names.iter().enumerate() {
            if names[..i].contains(n) {
                return Err(AlgebraError::DuplicateVariable(n.clone()));
            }
        }
        Ok(Arc::new(VariableContext { names }))
    }

    /// `prefix{start}..prefix{start+count-1}`, e.g. `x1..x8` or `tau0..tau7`.
    pub fn numbered(prefix: &str, start: usize, count: usize) -> Arc<Self> {
        Self::new((start..start + count).map(|i| format!("{prefix}{i}"))).expect("numbered names are unique")
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }
}

impl fmt::Debug for VariableContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.names.join(", "))
    }
}
