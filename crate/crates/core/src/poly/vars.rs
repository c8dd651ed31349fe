//! Process-wide variable registry.
//!
//! Variables are interned by name and receive stable integer ids, so
//! polynomials built in different modules compose. The registry only grows.

use std::collections::HashMap;
use std::fmt;
use std::sync::RwLock;

use once_cell::sync::Lazy;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

struct Registry {
    names: Vec<String>,
    ids: HashMap<String, u32>,
}

static REGISTRY: Lazy<RwLock<Registry>> = Lazy::new(|| {
    RwLock::new(Registry {
        names: Vec::new(),
        ids: HashMap::new(),
    })
});

/// An interned polynomial variable.
#[derive(Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Var(u32);

impl Var {
    /// Interns `name`, returning the existing variable if already known.
    pub fn named(name: &str) -> Var {
        if let Some(&id) = REGISTRY.read().expect("registry poisoned").ids.get(name) {
            return Var(id);
        }
        let mut reg = REGISTRY.write().expect("registry poisoned");
        if let Some(&id) = reg.ids.get(name) {
            return Var(id);
        }
        let id = reg.names.len() as u32;
        reg.names.push(name.to_string());
        reg.ids.insert(name.to_string(), id);
        Var(id)
    }

    /// Looks a variable up without interning it.
    pub fn lookup(name: &str) -> Option<Var> {
        REGISTRY
            .read()
            .expect("registry poisoned")
            .ids
            .get(name)
            .map(|&id| Var(id))
    }

    pub fn id(self) -> u32 {
        self.0
    }

    pub fn name(self) -> String {
        REGISTRY.read().expect("registry poisoned").names[self.0 as usize].clone()
    }
}

impl fmt::Debug for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

impl Serialize for Var {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.name())
    }
}

impl<'de> Deserialize<'de> for Var {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let name = String::deserialize(deserializer)?;
        Ok(Var::named(&name))
    }
}

/// Orders names so that `m2` sorts before `m10`; used for deterministic rendering
/// independent of interning order.
pub(crate) fn natural_cmp(a: &str, b: &str) -> std::cmp::Ordering {
    let (mut ai, mut bi) = (a.as_bytes(), b.as_bytes());
    loop {
        match (ai.first(), bi.first()) {
            (None, None) => return std::cmp::Ordering::Equal,
            (None, _) => return std::cmp::Ordering::Less,
            (_, None) => return std::cmp::Ordering::Greater,
            (Some(x), Some(y)) if x.is_ascii_digit() && y.is_ascii_digit() => {
                let na = ai.iter().take_while(|c| c.is_ascii_digit()).count();
                let nb = bi.iter().take_while(|c| c.is_ascii_digit()).count();
                let (da, db) = (&ai[..na], &bi[..nb]);
                let ord = da.len().cmp(&db.len()).then_with(|| da.cmp(db));
                if ord != std::cmp::Ordering::Equal {
                    return ord;
                }
                ai = &ai[na..];
                bi = &bi[nb..];
            }
            (Some(x), Some(y)) => {
                if x != y {
                    return x.cmp(y);
                }
                ai = &ai[1..];
                bi = &bi[1..];
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn interning_is_stable() {
        let a = Var::named("vars_test_a");
        let b = Var::named("vars_test_a");
        assert_eq!(a, b);
        assert_eq!(a.name(), "vars_test_a");
        assert_eq!(Var::lookup("vars_test_a"), Some(a));
        assert_eq!(Var::lookup("vars_test_never_interned"), None);
    }

    #[test]
    fn natural_ordering() {
        use std::cmp::Ordering::*;
        assert_eq!(natural_cmp("m2", "m10"), Less);
        assert_eq!(natural_cmp("m12", "m12"), Equal);
        assert_eq!(natural_cmp("mu1", "m1"), Greater);
    }
}
