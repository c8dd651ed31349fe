use serde::{Deserialize, Serialize};

use crate::poly::Var;

/// A block order: blocks compare lexicographically, earlier blocks dominate,
/// and each block is degree-reverse-lexicographic with its first variable
/// largest.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MonomialOrder {
    pub kind: String,
    pub blocks: Vec<Vec<Var>>,
}

impl MonomialOrder {
    /// Degree-reverse-lexicographic order on `vars`, first variable largest.
    pub fn degrevlex(vars: Vec<Var>) -> Self {
        Self::blocks(vec![vars])
    }

    pub fn blocks(blocks: Vec<Vec<Var>>) -> Self {
        let blocks: Vec<Vec<Var>> = blocks.into_iter().filter(|b| !b.is_empty()).collect();
        let kind = if blocks.len() <= 1 { "degrevlex" } else { "block-degrevlex" };
        MonomialOrder {
            kind: kind.to_string(),
            blocks,
        }
    }

    /// All variables, largest first.
    pub fn vars(&self) -> Vec<Var> {
        self.blocks.iter().flatten().copied().collect()
    }

    pub fn contains(&self, v: Var) -> bool {
        self.blocks.iter().any(|b| b.contains(&v))
    }

    /// A new order with `block` placed above every existing block.
    pub fn with_top_block(&self, block: Vec<Var>) -> Self {
        let mut blocks = vec![block];
        blocks.extend(self.blocks.iter().cloned());
        Self::blocks(blocks)
    }

    /// A short human-readable descriptor such as `degrevlex(x,y) > degrevlex(z)`.
    pub fn describe(&self) -> String {
        self.blocks
            .iter()
            .map(|b| {
                let names: Vec<String> = b.iter().map(|v| v.name()).collect();
                format!("degrevlex({})", names.join(","))
            })
            .collect::<Vec<_>>()
            .join(" > ")
    }
}
