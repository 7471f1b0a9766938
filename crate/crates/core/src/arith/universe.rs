use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Ordered set of variable names shared by every value in one computation.
///
/// The declaration order fixes the monomial order (lexicographic in this
/// order) and therefore the canonical serialization of all polynomials
/// built over the universe.
#[derive(Clone)]
pub struct VarUniverse {
    names: Vec<String>,
    index: HashMap<String, usize>,
}

/// Shared handle to a [`VarUniverse`].
pub type Universe = Arc<VarUniverse>;

impl VarUniverse {
    pub fn new<I, S>(names: I) -> Result<Universe>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        let mut index = HashMap::with_capacity(names.len());
        for (i, name) in names.iter().enumerate() {
            if name.is_empty() || !name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
                return Err(Error::Invalid(format!("bad variable name `{name}`")));
            }
            if !name.starts_with(|c: char| c.is_ascii_alphabetic()) {
                return Err(Error::Invalid(format!("bad variable name `{name}`")));
            }
            if index.insert(name.clone(), i).is_some() {
                return Err(Error::DuplicateVariable(name.clone()));
            }
        }
        Ok(Arc::new(VarUniverse { names, index }))
    }

    /// The canonical universe: `a1..an`, `b1..bk`, `y`, `z`, `s`, `t`, `m`, `e`, `x1..xN`.
    pub fn standard(n: usize, k: usize, free: usize) -> Universe {
        let names = (1..=n)
            .map(|i| format!("a{i}"))
            .chain((1..=k).map(|i| format!("b{i}")))
            .chain(["y", "z", "s", "t", "m", "e"].iter().map(|s| s.to_string()))
            .chain((1..=free).map(|i| format!("x{i}")));
        Self::new(names).expect("standard names are valid and distinct")
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

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }

    pub fn contains(&self, name: &str) -> bool {
        self.index.contains_key(name)
    }
}

impl PartialEq for VarUniverse {
    fn eq(&self, other: &Self) -> bool {
        self.names == other.names
    }
}

impl Eq for VarUniverse {}

impl fmt::Debug for VarUniverse {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.names).finish()
    }
}

pub(crate) fn same(a: &Universe, b: &Universe) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

pub(crate) fn ensure_same(a: &Universe, b: &Universe) -> Result<()> {
    if same(a, b) {
        Ok(())
    } else {
        Err(Error::UniverseMismatch)
    }
}
