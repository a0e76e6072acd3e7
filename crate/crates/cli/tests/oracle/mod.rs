//! Brute-force enumeration of two-term tilting complexes over the linear
//! fixture algebras, written independently of the homotopy-category
//! pipeline it feeds.
//!
//! Scope: the quivers `a2` and `a3lin` are linear without relations, so
//! `Hom(P_v, P_w)` is one-dimensional when `w <= v` (spanned by the unique
//! path from w to v) and zero otherwise, and composition is plain scalar
//! multiplication. Chain maps, homotopies and homology can therefore be
//! handled as rational matrices with support patterns, with only the raw
//! matrix-rank primitive shared with the engine.
//!
//! The search space is: multiplicity vectors at most one per projective
//! per degree, differential entries with coefficients in {-1, 0, 1}. Only
//! radical entries are enumerated: every homotopy class has a minimal
//! representative whose differential has radical entries and termwise
//! smaller multiplicities, so no tilting class inside the bounded space is
//! missed. Classes are deduplicated by their homology data, which
//! determines a minimal two-term complex over a hereditary algebra up to
//! homotopy isomorphism (T = pres(H^0) + ker(d)[1]).
//!
//! Summand counts come from interval multiplicities computed with the
//! rank inclusion-exclusion formula for modules over a linear quiver.

use tiltlab::exactla::{kernel_space, rat, Matrix, Rat};
use tiltlab::quiveralg::AlgebraRef;

#[derive(Clone, Debug, PartialEq)]
pub struct Candidate {
    pub m1: Vec<usize>,
    pub m0: Vec<usize>,
    /// entries[row][col]: coefficient of the unique path from the row
    /// summand's vertex to the column summand's vertex
    pub entries: Vec<Vec<i64>>,
}

fn supports(mults: &[usize]) -> Vec<usize> {
    let mut out = Vec::new();
    for (v, &k) in mults.iter().enumerate() {
        for _ in 0..k {
            out.push(v);
        }
    }
    out
}

fn vertex_count(name: &str) -> usize {
    match name {
        "a2" => 2,
        "a3lin" => 3,
        other => panic!("oracle only covers the linear fixtures, not {other}"),
    }
}

fn arrow_names(name: &str) -> Vec<&'static str> {
    match name {
        "a2" => vec!["a"],
        "a3lin" => vec!["a", "b"],
        other => panic!("oracle only covers the linear fixtures, not {other}"),
    }
}

/// Vertexwise matrix of the differential at vertex `u`.
fn d_at_vertex(ws: &[usize], vs: &[usize], entries: &[Vec<i64>], u: usize) -> Matrix {
    let rows: Vec<usize> = (0..ws.len()).filter(|&i| ws[i] <= u).collect();
    let cols: Vec<usize> = (0..vs.len()).filter(|&j| vs[j] <= u).collect();
    Matrix::from_fn(rows.len(), cols.len(), |r, c| rat(entries[rows[r]][cols[c]]))
}

/// Inclusion-pattern matrix of a sum of projectives from vertex `u` to
/// `u2`: summands present at `u` stay present at `u2 >= u`.
fn pattern(ws: &[usize], u: usize, u2: usize) -> Matrix {
    let rows: Vec<usize> = (0..ws.len()).filter(|&i| ws[i] <= u2).collect();
    let cols: Vec<usize> = (0..ws.len()).filter(|&i| ws[i] <= u).collect();
    Matrix::from_fn(rows.len(), cols.len(), |r, c| {
        if rows[r] == cols[c] {
            rat(1)
        } else {
            rat(0)
        }
    })
}

/// Interval multiplicities of the cokernel module of the candidate, via
/// ranks of the induced composite maps.
fn coker_intervals(
    n: usize,
    ws: &[usize],
    vs: &[usize],
    entries: &[Vec<i64>],
) -> Vec<((usize, usize), usize)> {
    // r[u][u2] = rank of the induced map coker_u -> coker_u2 for u <= u2
    let rank = |u: usize, u2: usize| -> i64 {
        if u > u2 || u2 >= n {
            return 0;
        }
        let phi = pattern(ws, u, u2);
        let d2 = d_at_vertex(ws, vs, entries, u2);
        if u == u2 {
            return (phi.rows() as i64) - (d2.rank() as i64);
        }
        let stacked = phi.hstack(&d2);
        (stacked.rank() as i64) - (d2.rank() as i64)
    };
    let mut out = Vec::new();
    for a in 0..n {
        for b in a..n {
            let m = rank(a, b) - if a > 0 { rank(a - 1, b) } else { 0 } - rank(a, b + 1)
                + if a > 0 { rank(a - 1, b + 1) } else { 0 };
            assert!(m >= 0, "interval multiplicities are nonnegative");
            if m > 0 {
                out.push(((a, b), m as usize));
            }
        }
    }
    out
}

/// Interval multiplicities of the kernel module of the candidate.
fn kernel_intervals(
    n: usize,
    ws: &[usize],
    vs: &[usize],
    entries: &[Vec<i64>],
) -> Vec<((usize, usize), usize)> {
    let kernels: Vec<Matrix> = (0..n)
        .map(|u| {
            let d = d_at_vertex(ws, vs, entries, u);
            // rows of the kernel basis, transposed into columns
            kernel_space(&d).basis().transpose()
        })
        .collect();
    let rank = |u: usize, u2: usize| -> i64 {
        if u > u2 || u2 >= n {
            return 0;
        }
        if u == u2 {
            return kernels[u].cols() as i64;
        }
        let phi = pattern(vs, u, u2);
        (&phi * &kernels[u]).rank() as i64
    };
    let mut out = Vec::new();
    for a in 0..n {
        for b in a..n {
            let m = rank(a, b) - if a > 0 { rank(a - 1, b) } else { 0 } - rank(a, b + 1)
                + if a > 0 { rank(a - 1, b + 1) } else { 0 };
            assert!(m >= 0);
            if m > 0 {
                out.push(((a, b), m as usize));
            }
        }
    }
    out
}

/// Presilting on the positive side: the null-homotopy span fills the whole
/// space of maps T^{-1} -> T^0.
fn presilting_up(ws: &[usize], vs: &[usize], entries: &[Vec<i64>]) -> bool {
    // ambient cells (i, j) with ws[i] <= vs[j]
    let cells: Vec<(usize, usize)> = (0..ws.len())
        .flat_map(|i| (0..vs.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| ws[i] <= vs[j])
        .collect();
    if cells.is_empty() {
        return true;
    }
    let cell_index = |i: usize, j: usize| cells.iter().position(|&c| c == (i, j));
    let mut rows: Vec<Vec<Rat>> = Vec::new();
    // d . h for unit h at (j0, j0'): column j0' receives d[:, j0]
    for j0 in 0..vs.len() {
        for j0p in 0..vs.len() {
            if vs[j0] > vs[j0p] {
                continue;
            }
            let mut row = vec![rat(0); cells.len()];
            let mut any = false;
            for i in 0..ws.len() {
                if entries[i][j0] != 0 {
                    if let Some(k) = cell_index(i, j0p) {
                        row[k] = rat(entries[i][j0]);
                        any = true;
                    }
                }
            }
            if any {
                rows.push(row);
            }
        }
    }
    // g . d for unit g at (i0, i0'): row i0 receives d[i0', :]
    for i0 in 0..ws.len() {
        for i0p in 0..ws.len() {
            if ws[i0] > ws[i0p] {
                continue;
            }
            let mut row = vec![rat(0); cells.len()];
            let mut any = false;
            for j in 0..vs.len() {
                if entries[i0p][j] != 0 {
                    if let Some(k) = cell_index(i0, j) {
                        row[k] = rat(entries[i0p][j]);
                        any = true;
                    }
                }
            }
            if any {
                rows.push(row);
            }
        }
    }
    if rows.is_empty() {
        return false;
    }
    Matrix::from_rows(cells.len(), rows).rank() == cells.len()
}

/// Presilting on the negative side: no nonzero g: T^0 -> T^{-1} with
/// g . d = 0 and d . g = 0.
fn presilting_down(ws: &[usize], vs: &[usize], entries: &[Vec<i64>]) -> bool {
    let cells: Vec<(usize, usize)> = (0..vs.len())
        .flat_map(|j| (0..ws.len()).map(move |i| (j, i)))
        .filter(|&(j, i)| vs[j] <= ws[i])
        .collect();
    if cells.is_empty() {
        return true;
    }
    let mut rows: Vec<Vec<Rat>> = Vec::new();
    // (g . d)[j][j'] = sum_i g[j][i] d[i][j']
    for j in 0..vs.len() {
        for jp in 0..vs.len() {
            let mut row = vec![rat(0); cells.len()];
            for (k, &(gj, gi)) in cells.iter().enumerate() {
                if gj == j && entries[gi][jp] != 0 {
                    row[k] = rat(entries[gi][jp]);
                }
            }
            rows.push(row);
        }
    }
    // (d . g)[i][i'] = sum_j d[i][j] g[j][i']
    for i in 0..ws.len() {
        for ip in 0..ws.len() {
            let mut row = vec![rat(0); cells.len()];
            for (k, &(gj, gi)) in cells.iter().enumerate() {
                if gi == ip && entries[i][gj] != 0 {
                    row[k] = rat(entries[i][gj]);
                }
            }
            rows.push(row);
        }
    }
    Matrix::from_rows(cells.len(), rows).rank() == cells.len()
}

type IntervalData = (Vec<((usize, usize), usize)>, Vec<((usize, usize), usize)>);

fn homology_key(n: usize, ws: &[usize], vs: &[usize], entries: &[Vec<i64>]) -> IntervalData {
    (
        coker_intervals(n, ws, vs, entries),
        kernel_intervals(n, ws, vs, entries),
    )
}

/// Enumerate the bounded search space and return one representative per
/// homotopy class of tilting complex found.
pub fn enumerate_tilting(name: &str) -> Vec<Candidate> {
    let n = vertex_count(name);
    let mut found: Vec<(IntervalData, Candidate)> = Vec::new();
    for m1_bits in 0..(1usize << n) {
        for m0_bits in 0..(1usize << n) {
            let m1: Vec<usize> = (0..n).map(|v| (m1_bits >> v) & 1).collect();
            let m0: Vec<usize> = (0..n).map(|v| (m0_bits >> v) & 1).collect();
            let vs = supports(&m1);
            let ws = supports(&m0);
            // radical cells of the differential
            let cells: Vec<(usize, usize)> = (0..ws.len())
                .flat_map(|i| (0..vs.len()).map(move |j| (i, j)))
                .filter(|&(i, j)| ws[i] < vs[j])
                .collect();
            let assignments = 3usize.pow(cells.len() as u32);
            for code in 0..assignments {
                let mut entries = vec![vec![0i64; vs.len()]; ws.len()];
                let mut c = code;
                for &(i, j) in &cells {
                    entries[i][j] = (c % 3) as i64 - 1;
                    c /= 3;
                }
                if !presilting_up(&ws, &vs, &entries) || !presilting_down(&ws, &vs, &entries) {
                    continue;
                }
                let key = homology_key(n, &ws, &vs, &entries);
                let count = key.0.len() + key.1.len();
                if count != n {
                    continue;
                }
                if !found.iter().any(|(k, _)| *k == key) {
                    found.push((
                        key,
                        Candidate {
                            m1: m1.clone(),
                            m0: m0.clone(),
                            entries,
                        },
                    ));
                }
            }
        }
    }
    found.into_iter().map(|(_, c)| c).collect()
}

/// Realize a candidate through the engine by writing it as a complex file
/// and parsing it back.
pub fn realize(algebra: &AlgebraRef, cand: &Candidate) -> tiltlab::complexcat::TwoTermComplex {
    let name = if algebra.vertex_count() == 2 { "a2" } else { "a3lin" };
    let arrows = arrow_names(name);
    let vs = supports(&cand.m1);
    let ws = supports(&cand.m0);
    let mut text = String::new();
    text.push_str(&format!(
        "deg -1: {}\n",
        cand.m1
            .iter()
            .map(usize::to_string)
            .collect::<Vec<_>>()
            .join(" ")
    ));
    text.push_str(&format!(
        "deg 0: {}\n",
        cand.m0
            .iter()
            .map(usize::to_string)
            .collect::<Vec<_>>()
            .join(" ")
    ));
    text.push_str("diff:\n");
    for i in 0..ws.len() {
        let mut toks = Vec::new();
        for j in 0..vs.len() {
            let c = cand.entries[i][j];
            if c == 0 {
                toks.push("0".to_string());
            } else {
                let path = arrows[ws[i]..vs[j]].join("*");
                toks.push(format!("{c}*{path}"));
            }
        }
        text.push_str(&toks.join(" "));
        text.push('\n');
    }
    tiltlab_cli::formats::parse_complex(&text, algebra).expect("oracle candidates are well-formed")
}

/// Random complex over any built-in algebra, for the Hom-module criterion;
/// entries draw coefficients in -2..=2 over the full basis of each block,
/// lazy paths included.
pub fn random_complex(
    algebra: &AlgebraRef,
    m1: &[usize],
    m0: &[usize],
    rand: &mut impl FnMut() -> usize,
) -> tiltlab::complexcat::TwoTermComplex {
    let vs = supports(m1);
    let ws = supports(m0);
    let mut text = String::new();
    let fmt = |mults: &[usize]| {
        mults
            .iter()
            .map(usize::to_string)
            .collect::<Vec<_>>()
            .join(" ")
    };
    text.push_str(&format!("deg -1: {}\n", fmt(m1)));
    text.push_str(&format!("deg 0: {}\n", fmt(m0)));
    text.push_str("diff:\n");
    if !vs.is_empty() && !ws.is_empty() {
        for &w in &ws {
            let mut toks = Vec::new();
            for &v in &vs {
                let basis = tiltlab::modcat::basis_indices(algebra, w, v);
                let mut terms = Vec::new();
                for &bi in &basis {
                    let c = (rand() % 5) as i64 - 2;
                    if c != 0 {
                        terms.push(format!("{c}*{}", algebra.label(bi)));
                    }
                }
                if terms.is_empty() {
                    toks.push("0".into());
                } else {
                    toks.push(terms.join("+"));
                }
            }
            text.push_str(&toks.join(" "));
            text.push('\n');
        }
    }
    tiltlab_cli::formats::parse_complex(&text, algebra).expect("random complexes are well-formed")
}
