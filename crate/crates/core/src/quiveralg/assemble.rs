use std::collections::HashMap;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactla::Rat;

use super::algebra::{AlgebraRef, FdAlgebra};
use super::quiver::{AlgebraPresentation, Path, PathComb};

pub const DEFAULT_MAX_PATH_LEN: usize = 64;

/// Hard cap on enumerated paths; hit only by wildly cyclic inputs.
const PATH_BUDGET: usize = 20_000;

/// Row space with a custom pivot priority, used so that elimination always
/// pivots on the longest paths and the surviving normal forms are the
/// shortest representatives.
struct PrioritySpan {
    /// rank[coord] = elimination priority (smaller eliminates first).
    rank: Vec<usize>,
    /// coord_by_rank[rank] = coordinate with that priority.
    coord_by_rank: Vec<usize>,
    /// Rows kept mutually reduced; each stored with its lead rank.
    rows: Vec<(usize, Vec<Rat>)>,
}

impl PrioritySpan {
    fn new(rank: Vec<usize>) -> Self {
        let mut coord_by_rank = vec![0usize; rank.len()];
        for (coord, &r) in rank.iter().enumerate() {
            coord_by_rank[r] = coord;
        }
        PrioritySpan {
            rank,
            coord_by_rank,
            rows: Vec::new(),
        }
    }

    fn lead(&self, v: &[Rat]) -> Option<usize> {
        v.iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(i, _)| self.rank[i])
            .min()
    }

    /// Remainder of `v` after eliminating against the stored rows.
    fn reduce(&self, v: &[Rat]) -> Vec<Rat> {
        let mut v = v.to_vec();
        for (lead_rank, row) in &self.rows {
            let c = v[self.coord_by_rank[*lead_rank]].clone();
            if !c.is_zero() {
                for (j, rj) in row.iter().enumerate() {
                    if !rj.is_zero() {
                        v[j] = &v[j] - &c * rj;
                    }
                }
            }
        }
        v
    }

    /// Insert `v`; returns the (normalized) new row when the span grew.
    fn insert(&mut self, v: &[Rat]) -> Option<Vec<Rat>> {
        let mut v = self.reduce(v);
        let lead_rank = self.lead(&v)?;
        let lead_coord = self.coord_by_rank[lead_rank];
        let inv = Rat::one() / v[lead_coord].clone();
        for x in v.iter_mut() {
            if !x.is_zero() {
                *x = &*x * &inv;
            }
        }
        for (_, row) in self.rows.iter_mut() {
            let c = row[lead_coord].clone();
            if !c.is_zero() {
                for (j, vj) in v.iter().enumerate() {
                    if !vj.is_zero() {
                        row[j] = &row[j] - &c * vj;
                    }
                }
            }
        }
        let pos = self
            .rows
            .binary_search_by_key(&lead_rank, |(r, _)| *r)
            .unwrap_err();
        self.rows.insert(pos, (lead_rank, v.clone()));
        Some(v)
    }

    fn pivot_coords(&self) -> Vec<usize> {
        self.rows
            .iter()
            .map(|(r, _)| self.coord_by_rank[*r])
            .collect()
    }
}

/// Assemble the path algebra of `pres.quiver` modulo the two-sided ideal
/// generated by `pres.relations`.
///
/// Works level by level: at level L everything is computed in the finite
/// quotient by paths of length > L, where the image of the relation ideal is
/// an honest span of truncated products. Once every path of length L lies in
/// that span (or no such path exists), all longer paths are relations too and
/// the level-L answer is final.
///
/// The quotient taken is by the arrow-adic closure of the relation ideal.
/// For length-homogeneous relations, and more generally whenever the ideal
/// is admissible, the closure equals the ideal and the result is exact.
/// Presentations whose closure is not admissible (for instance a quiver with
/// cycles and no relations) never reach a closing level and fail with
/// `NotFiniteDimensional`.
pub fn assemble_algebra(pres: &AlgebraPresentation, max_path_len: usize) -> Result<AlgebraRef> {
    let q = &pres.quiver;
    if q.vertex_count() == 0 {
        return Ok(FdAlgebra::zero_algebra());
    }

    let mut paths: Vec<Path> = q.paths_of_length(0);
    let mut index: HashMap<Path, usize> = paths
        .iter()
        .enumerate()
        .map(|(i, p)| (p.clone(), i))
        .collect();
    let mut len_start = vec![0usize, paths.len()]; // len_start[l] = first index of length l

    let mut level = 0usize;
    let (final_span, final_level) = loop {
        level += 1;
        if level > max_path_len {
            return Err(Error::NotFiniteDimensional(format!(
                "nonzero path classes of length {max_path_len} remain"
            )));
        }
        let new_paths = q.paths_of_length(level);
        for p in &new_paths {
            index.insert(p.clone(), paths.len());
            paths.push(p.clone());
        }
        len_start.push(paths.len());
        if paths.len() > PATH_BUDGET {
            return Err(Error::NotFiniteDimensional(format!(
                "path budget exceeded at length {level} ({} paths)",
                paths.len()
            )));
        }

        let span = saturate_ideal(pres, &paths, &index, level);

        if new_paths.is_empty() {
            break (span, level);
        }
        let all_dead = (len_start[level]..len_start[level + 1]).all(|pi| {
            let mut unit = vec![Rat::zero(); paths.len()];
            unit[pi] = Rat::one();
            span.reduce(&unit).iter().all(|x| x.is_zero())
        });
        if all_dead {
            break (span, level);
        }
    };

    // Survivors are the non-pivot paths; they all have length < final_level.
    let pivots = final_span.pivot_coords();
    let survivors: Vec<usize> = (0..paths.len()).filter(|i| !pivots.contains(i)).collect();
    debug_assert!(survivors
        .iter()
        .all(|&i| paths[i].len() < final_level || len_start[final_level] == len_start[final_level + 1]));

    let n = survivors.len();
    let coord_of_survivor: HashMap<usize, usize> = survivors
        .iter()
        .enumerate()
        .map(|(new, &old)| (old, new))
        .collect();

    let to_basis = |full: &[Rat]| -> Vec<Rat> {
        let red = final_span.reduce(full);
        let mut out = vec![Rat::zero(); n];
        for (i, x) in red.iter().enumerate() {
            if !x.is_zero() {
                out[*coord_of_survivor
                    .get(&i)
                    .expect("reduced vector supported on survivors")] = x.clone();
            }
        }
        out
    };

    let labels: Vec<String> = survivors.iter().map(|&i| paths[i].display(q)).collect();
    let src: Vec<usize> = survivors.iter().map(|&i| paths[i].src).collect();
    let tgt: Vec<usize> = survivors.iter().map(|&i| paths[i].tgt(q)).collect();

    let mut mult = vec![vec![Vec::new(); n]; n];
    for (bi, &pi) in survivors.iter().enumerate() {
        for (bj, &pj) in survivors.iter().enumerate() {
            let Some(concat) = paths[pi].compose(&paths[pj], q) else {
                continue;
            };
            let prod = match index.get(&concat) {
                Some(&ci) => {
                    let mut unit = vec![Rat::zero(); paths.len()];
                    unit[ci] = Rat::one();
                    to_basis(&unit)
                }
                // Longer than every enumerated path: lies in the relation ideal.
                None => vec![Rat::zero(); n],
            };
            if prod.iter().any(|x| !x.is_zero()) {
                mult[bi][bj] = prod;
            }
        }
    }

    let idem: Vec<usize> = (0..q.vertex_count())
        .map(|v| {
            survivors
                .iter()
                .position(|&i| paths[i].is_lazy() && paths[i].src == v)
                .expect("lazy paths always survive an admissible ideal")
        })
        .collect();
    let arrow_elems: Vec<Vec<Rat>> = (0..q.arrows().len())
        .map(|a| {
            let p = Path {
                src: q.arrow(a).src,
                arrows: vec![a],
            };
            let bi = survivors
                .iter()
                .position(|&i| paths[i] == p)
                .expect("arrows always survive an admissible ideal");
            let mut v = vec![Rat::zero(); n];
            v[bi] = Rat::one();
            v
        })
        .collect();
    let basis_expr: Vec<PathComb> = survivors
        .iter()
        .map(|&i| PathComb::single(paths[i].clone()))
        .collect();

    Ok(FdAlgebra::build(
        q.clone(),
        labels,
        src,
        tgt,
        mult,
        idem,
        arrow_elems,
        basis_expr,
        pres.relations.clone(),
    ))
}

/// Span of all truncated products u * r * v inside the level-`level`
/// truncation, computed by closing the relation images under arrow
/// multiplication on both sides.
fn saturate_ideal(
    pres: &AlgebraPresentation,
    paths: &[Path],
    index: &HashMap<Path, usize>,
    level: usize,
) -> PrioritySpan {
    let q = &pres.quiver;
    // Longest paths get the smallest rank so they are eliminated first.
    let mut order: Vec<usize> = (0..paths.len()).collect();
    order.sort_by_key(|&i| (std::cmp::Reverse(paths[i].len()), i));
    let mut rank = vec![0usize; paths.len()];
    for (r, &coord) in order.iter().enumerate() {
        rank[coord] = r;
    }

    let mut span = PrioritySpan::new(rank);
    let mut queue: Vec<Vec<Rat>> = Vec::new();

    for rel in &pres.relations {
        let mut v = vec![Rat::zero(); paths.len()];
        for (c, p) in &rel.terms {
            if p.len() <= level {
                let pi = index[p];
                v[pi] = &v[pi] + c;
            }
        }
        if let Some(row) = span.insert(&v) {
            queue.push(row);
        }
    }

    while let Some(v) = queue.pop() {
        for (a_idx, arrow) in q.arrows().iter().enumerate() {
            // left multiplication by the arrow
            let mut lv = vec![Rat::zero(); paths.len()];
            let mut any = false;
            for (pi, c) in v.iter().enumerate() {
                if c.is_zero() || paths[pi].src != arrow.tgt {
                    continue;
                }
                if paths[pi].len() < level {
                    let mut arrows = vec![a_idx];
                    arrows.extend_from_slice(&paths[pi].arrows);
                    let new_path = Path {
                        src: arrow.src,
                        arrows,
                    };
                    let ni = index[&new_path];
                    lv[ni] = &lv[ni] + c;
                    any = true;
                }
            }
            if any {
                if let Some(row) = span.insert(&lv) {
                    queue.push(row);
                }
            }
            // right multiplication by the arrow
            let mut rv = vec![Rat::zero(); paths.len()];
            let mut any = false;
            for (pi, c) in v.iter().enumerate() {
                if c.is_zero() || paths[pi].tgt(q) != arrow.src {
                    continue;
                }
                if paths[pi].len() < level {
                    let mut arrows = paths[pi].arrows.clone();
                    arrows.push(a_idx);
                    let new_path = Path {
                        src: paths[pi].src,
                        arrows,
                    };
                    let ni = index[&new_path];
                    rv[ni] = &rv[ni] + c;
                    any = true;
                }
            }
            if any {
                if let Some(row) = span.insert(&rv) {
                    queue.push(row);
                }
            }
        }
    }
    span
}
