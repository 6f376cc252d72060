//! Quivers and paths.
//!
//! A path stores its source vertex and its arrows in application order:
//! `word[0]` is applied first. Written composition is function-style, so
//! the product `b*a` means "a, then b" and its word is `[a, b]`.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Quiver {
    pub vertices: Vec<String>,
    pub arrows: Vec<Arrow>,
}

impl Quiver {
    pub fn new(vertices: Vec<String>, arrows: Vec<(String, String, String)>) -> Result<Quiver> {
        let mut q = Quiver { vertices, arrows: Vec::new() };
        {
            let mut seen = std::collections::HashSet::new();
            for v in &q.vertices {
                if !seen.insert(v.clone()) {
                    return Err(Error::Invalid(format!("duplicate vertex name `{v}`")));
                }
            }
        }
        let mut seen = std::collections::HashSet::new();
        for (name, s, t) in arrows {
            if !seen.insert(name.clone()) {
                return Err(Error::Invalid(format!("duplicate arrow name `{name}`")));
            }
            let source = q.vertex_index(&s)?;
            let target = q.vertex_index(&t)?;
            q.arrows.push(Arrow { name, source, target });
        }
        Ok(q)
    }

    pub fn vertex_index(&self, name: &str) -> Result<usize> {
        self.vertices.iter().position(|v| v == name).ok_or_else(|| Error::UnknownVertex(name.to_string()))
    }

    pub fn arrow_index(&self, name: &str) -> Result<usize> {
        self.arrows.iter().position(|a| a.name == name).ok_or_else(|| Error::UnknownArrow(name.to_string()))
    }

    pub fn n_vertices(&self) -> usize {
        self.vertices.len()
    }

    /// Same quiver with every arrow reversed; names are kept, so the arrow
    /// at index `i` corresponds to the reversed arrow at index `i`.
    pub fn reversed(&self) -> Quiver {
        Quiver {
            vertices: self.vertices.clone(),
            arrows: self
                .arrows
                .iter()
                .map(|a| Arrow { name: a.name.clone(), source: a.target, target: a.source })
                .collect(),
        }
    }
}

/// A directed path: `source` plus arrow indices in application order.
/// The empty word is the trivial path at `source`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Path {
    pub source: usize,
    pub word: Vec<usize>,
}

impl Path {
    pub fn trivial(v: usize) -> Path {
        Path { source: v, word: Vec::new() }
    }

    pub fn arrow(q: &Quiver, idx: usize) -> Path {
        Path { source: q.arrows[idx].source, word: vec![idx] }
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.word.is_empty()
    }

    pub fn target(&self, q: &Quiver) -> usize {
        self.word.last().map_or(self.source, |&a| q.arrows[a].target)
    }

    /// Function-style composition: `self` after `first`.
    /// Requires `first.target == self.source`.
    pub fn compose_after(&self, q: &Quiver, first: &Path) -> Option<Path> {
        if first.target(q) != self.source {
            return None;
        }
        let mut word = first.word.clone();
        word.extend_from_slice(&self.word);
        Some(Path { source: first.source, word })
    }

    /// Length-then-lexicographic order on words; the canonical monomial
    /// order for path reduction.
    pub fn cmp_deglex(&self, other: &Path) -> std::cmp::Ordering {
        self.word
            .len()
            .cmp(&other.word.len())
            .then_with(|| self.word.cmp(&other.word))
            .then_with(|| self.source.cmp(&other.source))
    }

    pub fn display(&self, q: &Quiver) -> String {
        if self.word.is_empty() {
            format!("e{}", q.vertices[self.source])
        } else {
            // function-style: last applied arrow printed first
            self.word.iter().rev().map(|&a| q.arrows[a].name.clone()).collect::<Vec<_>>().join("*")
        }
    }
}

impl fmt::Display for Arrow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}->{}", self.name, self.source, self.target)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Quiver {
        Quiver::new(
            vec!["1".into(), "2".into()],
            vec![("a".into(), "1".into(), "1".into()), ("b".into(), "1".into(), "2".into())],
        )
        .unwrap()
    }

    #[test]
    fn composition_follows_targets() {
        let q = q();
        let a = Path::arrow(&q, 0);
        let b = Path::arrow(&q, 1);
        // b after a: 1 -> 1 -> 2
        let ba = b.compose_after(&q, &a).unwrap();
        assert_eq!(ba.source, 0);
        assert_eq!(ba.target(&q), 1);
        assert_eq!(ba.word, vec![0, 1]);
        // a after b is not composable
        assert!(a.compose_after(&q, &b).is_none());
    }

    #[test]
    fn display_is_function_style() {
        let q = q();
        let a = Path::arrow(&q, 0);
        let b = Path::arrow(&q, 1);
        let ba = b.compose_after(&q, &a).unwrap();
        assert_eq!(ba.display(&q), "b*a");
    }
}
