use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet, Word};

/// A total vertex coloring with colors `1..=k`, every color used.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Coloring {
    colors: Vec<usize>,
    k: usize,
}

impl Coloring {
    /// Renumbers arbitrary positive labels to `1..=k` in order of first use.
    pub fn from_labels(labels: &[usize]) -> Result<Self> {
        if let Some(v) = labels.iter().position(|&c| c == 0) {
            return Err(Error::InvalidColoring(format!("vertex {v} is uncolored")));
        }
        let mut seen: Vec<usize> = Vec::new();
        let colors = labels
            .iter()
            .map(|&c| match seen.iter().position(|&s| s == c) {
                Some(i) => i + 1,
                None => {
                    seen.push(c);
                    seen.len()
                }
            })
            .collect();
        Ok(Coloring { colors, k: seen.len() })
    }

    /// One color per nonempty class, in the order listed; classes must
    /// partition `0..n`.
    pub fn from_classes<W: Word>(n: usize, classes: &[VertexSet<W>]) -> Result<Self> {
        let mut colors = vec![0; n];
        let mut k = 0;
        for class in classes.iter().filter(|c| !c.is_empty()) {
            k += 1;
            for v in class.iter() {
                if v >= n {
                    return Err(Error::InvalidSet { vertex: v, n });
                }
                if colors[v] != 0 {
                    return Err(Error::InvalidColoring(format!("vertex {v} colored twice")));
                }
                colors[v] = k;
            }
        }
        if let Some(v) = colors.iter().position(|&c| c == 0) {
            return Err(Error::InvalidColoring(format!("vertex {v} is uncolored")));
        }
        Ok(Coloring { colors, k })
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn color(&self, v: usize) -> usize {
        self.colors[v]
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn classes<W: Word>(&self) -> Vec<VertexSet<W>> {
        let mut out = vec![VertexSet::empty(); self.k];
        for (v, &c) in self.colors.iter().enumerate() {
            out[c - 1].insert(v);
        }
        out
    }
}

/// True iff `c` is proper on `g`. A coloring of the wrong length is an error.
pub fn validate<W: Word>(g: &Graph<W>, c: &Coloring) -> Result<bool> {
    if c.len() != g.n() {
        return Err(Error::InvalidColoring(format!(
            "coloring covers {} vertices, graph has {}",
            c.len(),
            g.n()
        )));
    }
    Ok(g.edges().iter().all(|&(u, v)| c.color(u) != c.color(v)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validate_examples() {
        let k3 = Graph::<u64>::complete(3).unwrap();
        assert!(validate(&k3, &Coloring::from_labels(&[1, 2, 3]).unwrap()).unwrap());
        assert!(!validate(&k3, &Coloring::from_labels(&[1, 1, 2]).unwrap()).unwrap());
        let c5 = Graph::<u64>::cycle(5).unwrap();
        assert!(validate(&c5, &Coloring::from_labels(&[1, 2, 1, 2, 3]).unwrap()).unwrap());
        assert!(matches!(
            validate(&c5, &Coloring::from_labels(&[1, 2]).unwrap()),
            Err(Error::InvalidColoring(_))
        ));
        assert!(Coloring::from_labels(&[1, 0]).is_err());
    }

    #[test]
    fn labels_are_compacted() {
        let c = Coloring::from_labels(&[7, 3, 7, 9]).unwrap();
        assert_eq!(c.colors(), &[1, 2, 1, 3]);
        assert_eq!(c.k(), 3);
    }
}
