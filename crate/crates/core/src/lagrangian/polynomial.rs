use crate::hypergraph::UniformHypergraph;

/// Flat, 0-based edge list of a hypergraph, evaluated as a multilinear form.
#[derive(Clone, Debug)]
pub struct EdgePolynomial {
    n: usize,
    r: usize,
    vertices: Vec<usize>,
}

impl EdgePolynomial {
    pub fn new(g: &UniformHypergraph) -> Self {
        let vertices = g.edges().flat_map(|e| e.vertices().map(|v| v - 1)).collect();
        Self { n: g.n(), r: g.r(), vertices }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn edge_count(&self) -> usize {
        self.vertices.len() / self.r
    }

    pub fn edges(&self) -> impl Iterator<Item = &[usize]> {
        self.vertices.chunks_exact(self.r)
    }

    pub fn value(&self, x: &[f64]) -> f64 {
        self.edges().map(|e| e.iter().map(|&v| x[v]).product::<f64>()).sum()
    }

    /// Fills `grad[i] = λ(E_i, x)` and returns `λ(G, x)`.
    pub fn value_and_gradient(&self, x: &[f64], grad: &mut [f64]) -> f64 {
        grad.iter_mut().for_each(|g| *g = 0.0);
        let mut value = 0.0;
        for e in self.edges() {
            let mut all = 1.0;
            for (p, &v) in e.iter().enumerate() {
                let mut others = 1.0;
                for (q, &u) in e.iter().enumerate() {
                    if q != p {
                        others *= x[u];
                    }
                }
                grad[v] += others;
                if p == 0 {
                    all = others * x[v];
                }
            }
            value += all;
        }
        value
    }

    /// Dense matrix of `λ(E_ij, x)` (zero diagonal).
    pub fn pair_matrix(&self, x: &[f64]) -> Vec<Vec<f64>> {
        let mut h = vec![vec![0.0; self.n]; self.n];
        for e in self.edges() {
            for p in 0..e.len() {
                for q in p + 1..e.len() {
                    let prod: f64 = e
                        .iter()
                        .enumerate()
                        .filter(|(k, _)| *k != p && *k != q)
                        .map(|(_, &u)| x[u])
                        .product();
                    h[e[p]][e[q]] += prod;
                    h[e[q]][e[p]] += prod;
                }
            }
        }
        h
    }

    /// Whether some edge contains both `i` and `j` and lies inside the
    /// support of `x` (0-based indices).
    pub fn pair_covered_in_support(&self, x: &[f64], i: usize, j: usize) -> bool {
        self.edges()
            .any(|e| e.contains(&i) && e.contains(&j) && e.iter().all(|&u| x[u] > 0.0))
    }

    pub fn kkt_residual(&self, x: &[f64]) -> f64 {
        let mut grad = vec![0.0; self.n];
        let value = self.value_and_gradient(x, &mut grad);
        let target = self.r as f64 * value;
        x.iter()
            .zip(&grad)
            .filter(|(w, _)| **w > 0.0)
            .map(|(_, g)| (g - target).abs())
            .fold(0.0, f64::max)
    }
}
