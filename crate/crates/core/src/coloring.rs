use crate::bitset::VertexSet;
use crate::graph::{Graph, GraphId};
use crate::Result;

/// Which construction produced a coloring. Variants mirror [`crate::Regime`].
#[allow(non_camel_case_types)]
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Route {
    CompleteLike,
    T1,
    T2_3k,
    T2_3k1 {
        /// The branch that uses two unmatched vertices instead of a
        /// second matched pair for the four-vertex class.
        fallback: bool,
    },
    T2_3k2,
    T3Connected,
    T3Disconnected,
    /// Read from a document or produced by the exact oracle.
    External,
}

/// An ordered list of vertex classes over a host graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeColoring {
    pub host: GraphId,
    pub n: usize,
    pub classes: Vec<VertexSet>,
    pub route: Route,
}

impl TreeColoring {
    pub fn from_class_lists(g: &Graph, classes: Vec<Vec<usize>>, route: Route) -> Result<Self> {
        let classes = classes
            .into_iter()
            .map(|c| VertexSet::from_vertices(g.n(), c))
            .collect::<Result<Vec<_>>>()?;
        Ok(TreeColoring {
            host: g.id(),
            n: g.n(),
            classes,
            route,
        })
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    /// Classes as sorted vertex lists.
    pub fn class_lists(&self) -> Vec<Vec<usize>> {
        self.classes.iter().map(VertexSet::to_vec).collect()
    }

    /// Class index of every vertex, or `None` for uncovered vertices.
    pub fn color_of(&self) -> Vec<Option<usize>> {
        let mut out = vec![None; self.n];
        for (i, c) in self.classes.iter().enumerate() {
            for v in c.iter() {
                out[v].get_or_insert(i);
            }
        }
        out
    }
}
