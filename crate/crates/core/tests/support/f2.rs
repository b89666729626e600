//! Brute-force oracles over the two-element field, with vectors as bitmasks.

use std::collections::HashSet;
use std::sync::Arc;

use quiverrank::rank::max_epi_family;
use quiverrank::{is_indec, Matrix, Quiver, Representation, F2};

/// Linear map as its columns, each a bitmask over the rows.
type Cols = Vec<u32>;

fn apply(m: &[u32], x: u32) -> u32 {
    m.iter().enumerate().filter(|(j, _)| x >> j & 1 == 1).fold(0, |acc, (_, c)| acc ^ c)
}

fn compose(a: &[u32], b: &[u32]) -> Cols {
    b.iter().map(|&c| apply(a, c)).collect()
}

/// Subspace as the set of its elements: bit `x` is set when vector `x` lies in it.
fn span_with(set: u64, v: u32) -> u64 {
    let mut out = set;
    for s in 0..64 {
        if set >> s & 1 == 1 {
            out |= 1 << (s as u32 ^ v);
        }
    }
    out
}

pub fn subspaces(d: usize) -> Vec<u64> {
    let mut seen = HashSet::from([1u64]);
    let mut frontier = vec![1u64];
    while let Some(s) = frontier.pop() {
        for v in 0..1u32 << d {
            let t = span_with(s, v);
            if seen.insert(t) {
                frontier.push(t);
            }
        }
    }
    let mut out: Vec<u64> = seen.into_iter().collect();
    out.sort_unstable();
    out
}

fn image(m: &[u32], set: u64) -> u64 {
    (0..64).filter(|x| set >> x & 1 == 1).fold(0, |acc, x| acc | 1 << apply(m, x))
}

pub fn two_cycle() -> Arc<Quiver> {
    Arc::new(Quiver::new(["x", "y"], [("a", "x", "y"), ("b", "y", "x")]).unwrap())
}

/// Every dimension vector with the given total bound.
fn dim_vectors(n: usize, max_total: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|d: Vec<usize>| {
                let used: usize = d.iter().sum();
                (0..=max_total - used).map(move |k| {
                    let mut e = d.clone();
                    e.push(k);
                    e
                })
            })
            .collect();
    }
    out
}

/// Every representation with the given dimension vector, as bitmask matrices.
fn all_reps(q: &Quiver, dims: &[usize]) -> Vec<Vec<Cols>> {
    let shapes: Vec<(usize, usize)> = q.arrows().iter().map(|a| (dims[a.head], dims[a.tail])).collect();
    let bits: usize = shapes.iter().map(|(h, t)| h * t).sum();
    (0..1u64 << bits)
        .map(|code| {
            let mut code = code;
            shapes
                .iter()
                .map(|&(h, t)| {
                    (0..t)
                        .map(|_| {
                            let c = (code & ((1 << h) - 1)) as u32;
                            code >>= h;
                            c
                        })
                        .collect()
                })
                .collect()
        })
        .collect()
}

fn to_matrix(rows: usize, cols: &[u32]) -> Matrix<F2> {
    let ints: Vec<i64> =
        (0..rows).flat_map(|r| cols.iter().map(move |c| (c >> r & 1) as i64)).collect();
    Matrix::from_ints(rows, cols.len(), &ints)
}

fn to_rep(q: &Arc<Quiver>, dims: &[usize], mats: &[Cols]) -> Representation<F2> {
    let ms = q.arrows().iter().zip(mats).map(|(a, m)| to_matrix(dims[a.head], m)).collect();
    Representation::new(q.clone(), dims.to_vec(), ms).unwrap()
}

fn basis_set(m: &Matrix<F2>) -> u64 {
    let mut set = 1u64;
    for j in 0..m.cols() {
        let v = (0..m.rows()).filter(|&i| m[(i, j)].value() == 1).fold(0u32, |acc, i| acc | 1 << i);
        set = span_with(set, v);
    }
    set
}

/// The largest epimorphic subrepresentation, by trying every family of subspaces.
fn delta_oracle(q: &Quiver, dims: &[usize], mats: &[Cols], lattices: &[Vec<u64>]) -> Result<Vec<u64>, String> {
    let mut families: Vec<Vec<u64>> = vec![vec![]];
    for x in 0..dims.len() {
        families = families
            .into_iter()
            .flat_map(|f| {
                lattices[dims[x]].iter().map(move |&s| {
                    let mut g = f.clone();
                    g.push(s);
                    g
                })
            })
            .collect();
    }
    let epi: Vec<Vec<u64>> = families
        .into_iter()
        .filter(|u| q.arrows().iter().zip(mats).all(|(a, m)| image(m, u[a.tail]) == u[a.head]))
        .collect();
    let best = epi.iter().max_by_key(|u| u.iter().map(|s| s.count_ones()).sum::<u32>()).unwrap().clone();
    if epi.iter().any(|u| u.iter().zip(&best).any(|(s, b)| s & !b != 0)) {
        return Err(format!("dims {dims:?}, maps {mats:?}: maximal epimorphic family is not unique"));
    }
    Ok(best)
}

/// Compares `max_epi_family` with the oracle on every representation; returns how many were checked.
pub fn check_delta(q: Arc<Quiver>, max_total: usize) -> Result<usize, String> {
    let lattices: Vec<Vec<u64>> = (0..=max_total).map(subspaces).collect();
    let mut count = 0;
    for dims in dim_vectors(q.num_vertices(), max_total) {
        for mats in all_reps(&q, &dims) {
            let expected = delta_oracle(&q, &dims, &mats, &lattices)?;
            let got: Vec<u64> =
                max_epi_family(&to_rep(&q, &dims, &mats)).iter().map(|s| basis_set(s.basis())).collect();
            if got != expected {
                return Err(format!("dims {dims:?}, maps {mats:?}: got {got:?}, expected {expected:?}"));
            }
            count += 1;
        }
    }
    Ok(count)
}

fn rank(m: &[u32]) -> usize {
    let mut cols = m.to_vec();
    let mut r = 0;
    for bit in 0..32 {
        if let Some(p) = cols.iter().position(|&c| c >> bit & 1 == 1) {
            let pivot = cols.swap_remove(p);
            for c in cols.iter_mut().filter(|c| **c >> bit & 1 == 1) {
                *c ^= pivot;
            }
            r += 1;
        }
    }
    r
}

/// Whether some endomorphism other than 0 and 1 is idempotent.
fn has_nontrivial_idempotent(q: &Quiver, dims: &[usize], mats: &[Cols]) -> bool {
    let bits: usize = dims.iter().map(|d| d * d).sum();
    let total: usize = dims.iter().sum();
    (0..1u64 << bits).any(|code| {
        let mut code = code;
        let e: Vec<Cols> = dims
            .iter()
            .map(|&d| {
                (0..d)
                    .map(|_| {
                        let c = (code & ((1 << d) - 1)) as u32;
                        code >>= d;
                        c
                    })
                    .collect()
            })
            .collect();
        let intertwines = q
            .arrows()
            .iter()
            .zip(mats)
            .all(|(a, m)| compose(&e[a.head], m) == compose(m, &e[a.tail]));
        if !intertwines || e.iter().any(|ex| compose(ex, ex) != *ex) {
            return false;
        }
        let r: usize = e.iter().map(|ex| rank(ex)).sum();
        r != 0 && r != total
    })
}

/// Compares `is_indec` with the idempotent search on every nonzero representation.
pub fn check_idempotents(q: Arc<Quiver>, max_total: usize) -> Result<usize, String> {
    let mut count = 0;
    for dims in dim_vectors(q.num_vertices(), max_total) {
        if dims.iter().sum::<usize>() == 0 {
            continue;
        }
        for mats in all_reps(&q, &dims) {
            let decomposable = has_nontrivial_idempotent(&q, &dims, &mats);
            let indec = is_indec(&to_rep(&q, &dims, &mats)).map_err(|e| format!("dims {dims:?}: {e}"))?;
            if indec == decomposable {
                return Err(format!("dims {dims:?}, maps {mats:?}: is_indec says {indec}"));
            }
            count += 1;
        }
    }
    Ok(count)
}
