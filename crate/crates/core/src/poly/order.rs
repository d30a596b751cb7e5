use std::fmt;

use crate::error::{Error, Result};

/// A variable of a [`VariableOrder`], identified by its position.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Variable {
    index: usize,
    name: String,
}

impl Variable {
    pub fn index(&self) -> usize {
        self.index
    }

    pub fn name(&self) -> &str {
        &self.name
    }
}

impl fmt::Display for Variable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

/// Ordered, duplicate-free list of variable names. Position 0 is eliminated
/// first by the projection loops and is the most significant variable of
/// the lexicographic term order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VariableOrder {
    names: Vec<String>,
}

fn is_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl VariableOrder {
    pub fn new<I, S>(names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(Error::InvalidOrder("no variables".into()));
        }
        for (i, name) in names.iter().enumerate() {
            if !is_identifier(name) {
                return Err(Error::InvalidOrder(format!("`{name}` is not an identifier")));
            }
            if names[..i].contains(name) {
                return Err(Error::InvalidOrder(format!("duplicate variable `{name}`")));
            }
        }
        Ok(VariableOrder { names })
    }

    /// Parses a comma separated list such as `x,y,z`.
    pub fn parse_list(list: &str) -> Result<Self> {
        Self::new(list.split(',').map(str::trim).filter(|s| !s.is_empty()))
    }

    pub fn arity(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// The variable at `index`. Panics when out of range.
    pub fn var(&self, index: usize) -> Variable {
        Variable {
            index,
            name: self.names[index].clone(),
        }
    }

    pub fn variable(&self, name: &str) -> Result<Variable> {
        self.names
            .iter()
            .position(|n| n == name)
            .map(|index| self.var(index))
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }

    pub fn variables(&self) -> impl Iterator<Item = Variable> + '_ {
        (0..self.arity()).map(|i| self.var(i))
    }

    pub fn contains(&self, v: &Variable) -> bool {
        self.names.get(v.index).is_some_and(|n| *n == v.name)
    }

    /// Appends a variable named `base` (primed until unused) and returns the
    /// extended order together with the new variable.
    pub fn with_fresh(&self, base: &str) -> (VariableOrder, Variable) {
        let mut name = base.to_string();
        while self.names.contains(&name) {
            name.push('_');
        }
        let mut names = self.names.clone();
        names.push(name);
        let order = VariableOrder { names };
        let v = order.var(order.arity() - 1);
        (order, v)
    }

    /// True when `self` is a prefix of `other`.
    pub fn is_prefix_of(&self, other: &VariableOrder) -> bool {
        other.names.starts_with(&self.names)
    }
}

impl fmt::Display for VariableOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.names.join(", "))
    }
}
