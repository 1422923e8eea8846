use crate::bitlinalg::BitMatrix;
use crate::graph::WeightedGraph;
use crate::weight::Weight;

/// Three vertex lists `X`, `Y`, `Z` and the cross adjacency between them.
///
/// The lists may overlap; the triangle primitives treat the three roles as
/// separate copies. Bit `(i, j)` of `adj_xy` says whether `x_ids[i]` and
/// `y_ids[j]` are adjacent, and likewise for the other two blocks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TripartiteSlice {
    pub x_ids: Vec<usize>,
    pub y_ids: Vec<usize>,
    pub z_ids: Vec<usize>,
    pub adj_xy: BitMatrix,
    pub adj_yz: BitMatrix,
    pub adj_xz: BitMatrix,
}

impl TripartiteSlice {
    /// Slice over the given lists with every cross edge of `g`.
    pub fn from_lists<W: Weight>(g: &WeightedGraph<W>, x: Vec<usize>, y: Vec<usize>, z: Vec<usize>) -> Self {
        Self::from_lists_filtered(g, x, y, z, |_, _| true)
    }

    /// Like [`from_lists`](Self::from_lists), but a `Y`–`Z` edge is kept only
    /// when `keep_yz(y, z)` holds.
    pub fn from_lists_filtered<W: Weight>(
        g: &WeightedGraph<W>,
        x: Vec<usize>,
        y: Vec<usize>,
        z: Vec<usize>,
        keep_yz: impl FnMut(usize, usize) -> bool,
    ) -> Self {
        let dense = g.dense_adjacency();
        let adj_xy = gather(dense, &x, &y, |_, _| true);
        let adj_yz = gather(dense, &y, &z, keep_yz);
        let adj_xz = gather(dense, &x, &z, |_, _| true);
        TripartiteSlice {
            x_ids: x,
            y_ids: y,
            z_ids: z,
            adj_xy,
            adj_yz,
            adj_xz,
        }
    }

    pub fn shape(&self) -> (usize, usize, usize) {
        (self.x_ids.len(), self.y_ids.len(), self.z_ids.len())
    }
}

/// `out[i][j] = adj[rows[i]][cols[j]] && keep(rows[i], cols[j])`.
fn gather(adj: &BitMatrix, rows: &[usize], cols: &[usize], mut keep: impl FnMut(usize, usize) -> bool) -> BitMatrix {
    let mut out = BitMatrix::zeros(rows.len(), cols.len());
    for (i, &r) in rows.iter().enumerate() {
        for (j, &c) in cols.iter().enumerate() {
            if adj.get(r, c) && keep(r, c) {
                out.set(i, j, true);
            }
        }
    }
    out
}

/// Slice whose lists are the vertices satisfying each predicate, in
/// ascending id order.
pub fn build_slice<W: Weight>(
    g: &WeightedGraph<W>,
    mut x_pred: impl FnMut(usize) -> bool,
    mut y_pred: impl FnMut(usize) -> bool,
    mut z_pred: impl FnMut(usize) -> bool,
) -> TripartiteSlice {
    let x = (0..g.n()).filter(|&v| x_pred(v)).collect();
    let y = (0..g.n()).filter(|&v| y_pred(v)).collect();
    let z = (0..g.n()).filter(|&v| z_pred(v)).collect();
    TripartiteSlice::from_lists(g, x, y, z)
}
