use petgraph::algo::tarjan_scc;
use petgraph::graph::DiGraph;

use crate::automata::Dfa;

/// Dominant eigenvalue of a presentation graph.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SpectralResult {
    pub value: f64,
    /// `log2(value)`; negative infinity when the essential graph is empty.
    pub entropy_bits: f64,
    /// Half-width of the Collatz–Wielandt bracket around `value`.
    pub tolerance: f64,
    pub iterations: usize,
}

const RELATIVE_TOLERANCE: f64 = 1e-13;
const STEPS_PER_ROUND: usize = 2000;
const MAX_SQUARINGS: usize = 40;

/// Entropy of the language of `d` from the essential part of its minimal
/// automaton: the log of the largest spectral radius over strongly connected
/// components.
pub fn entropy_spectral(d: &Dfa) -> SpectralResult {
    let graph = d.minimized().trim_essential();
    if graph.is_empty() {
        return SpectralResult { value: 0.0, entropy_bits: f64::NEG_INFINITY, tolerance: 0.0, iterations: 0 };
    }
    let r = spectral_radius(&graph.adjacency());
    SpectralResult { entropy_bits: r.value.log2(), ..r }
}

/// Spectral radius of a nonnegative integer matrix.
pub fn spectral_radius(matrix: &[Vec<u64>]) -> SpectralResult {
    let n = matrix.len();
    let mut graph = DiGraph::<(), ()>::new();
    let nodes: Vec<_> = (0..n).map(|_| graph.add_node(())).collect();
    for (p, row) in matrix.iter().enumerate() {
        for (q, &m) in row.iter().enumerate() {
            if m > 0 {
                graph.add_edge(nodes[p], nodes[q], ());
            }
        }
    }
    let mut best = SpectralResult { value: 0.0, entropy_bits: f64::NEG_INFINITY, tolerance: 0.0, iterations: 0 };
    for component in tarjan_scc(&graph) {
        let idx: Vec<usize> = component.iter().map(|v| v.index()).collect();
        if idx.len() == 1 && matrix[idx[0]][idx[0]] == 0 {
            continue;
        }
        let sub: Vec<Vec<f64>> = idx.iter().map(|&p| idx.iter().map(|&q| matrix[p][q] as f64).collect()).collect();
        let r = irreducible_radius(sub);
        best.iterations += r.iterations;
        if r.value > best.value {
            best.value = r.value;
            best.tolerance = best.tolerance.max(r.tolerance);
        }
    }
    best.entropy_bits = best.value.log2();
    best
}

/// Power iteration on `M + I`, which is primitive for irreducible `M`.
///
/// If the bracket does not close, the matrix is squared (with rescaling) and
/// iteration resumes on the power.
fn irreducible_radius(m: Vec<Vec<f64>>) -> SpectralResult {
    let n = m.len();
    let mut power = m;
    for (i, row) in power.iter_mut().enumerate() {
        row[i] += 1.0;
    }
    let mut exponent = 1.0f64;
    let mut log_scale = 0.0f64;
    let mut v = vec![1.0; n];
    let mut iterations = 0;
    let mut last = (0.0, f64::INFINITY);
    for _ in 0..=MAX_SQUARINGS {
        for _ in 0..STEPS_PER_ROUND {
            iterations += 1;
            let w = mat_vec(&power, &v);
            let (lo, hi) = w.iter().zip(&v).fold((f64::INFINITY, 0.0f64), |(lo, hi), (a, b)| {
                let r = a / b;
                (lo.min(r), hi.max(r))
            });
            let to_base = |r: f64| ((r.ln() + log_scale) / exponent).exp() - 1.0;
            last = (to_base(lo), to_base(hi));
            let top = w.iter().cloned().fold(0.0, f64::max);
            v = w.into_iter().map(|x| (x / top).max(f64::MIN_POSITIVE)).collect();
            if last.1 - last.0 <= RELATIVE_TOLERANCE * last.1.max(1.0) {
                return finish(last, iterations);
            }
        }
        let squared = mat_mul(&power, &power);
        let top = squared.iter().flatten().cloned().fold(0.0, f64::max);
        power = squared.into_iter().map(|row| row.into_iter().map(|x| x / top).collect()).collect();
        log_scale = 2.0 * log_scale + top.ln();
        exponent *= 2.0;
    }
    finish(last, iterations)
}

fn finish((lo, hi): (f64, f64), iterations: usize) -> SpectralResult {
    let value = 0.5 * (lo + hi);
    let tolerance = (0.5 * (hi - lo)).max(f64::EPSILON * value.max(1.0));
    SpectralResult { value, entropy_bits: value.log2(), tolerance, iterations }
}

fn mat_vec(m: &[Vec<f64>], v: &[f64]) -> Vec<f64> {
    m.iter().map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum()).collect()
}

fn mat_mul(a: &[Vec<f64>], b: &[Vec<f64>]) -> Vec<Vec<f64>> {
    let n = a.len();
    (0..n).map(|i| (0..n).map(|j| (0..n).map(|k| a[i][k] * b[k][j]).sum()).collect()).collect()
}
