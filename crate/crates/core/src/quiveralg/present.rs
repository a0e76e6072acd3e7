use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactla::{kernel_space, Matrix, Rat, Subspace};

use super::algebra::{AlgebraRef, FdAlgebra};
use super::quiver::{Arrow, PathComb, Quiver};

const PRESENTATION_PATH_BUDGET: usize = 50_000;

/// Radical of a multiplication table via the trace form of the regular
/// representation (characteristic zero).
pub(crate) fn radical_of_table(
    dim: usize,
    mult: &dyn Fn(&[Rat], &[Rat]) -> Vec<Rat>,
) -> Subspace {
    if dim == 0 {
        return Subspace::zero(0);
    }
    let unit = |i: usize| {
        let mut v = vec![Rat::zero(); dim];
        v[i] = Rat::one();
        v
    };
    let lmats: Vec<Matrix> = (0..dim)
        .map(|i| {
            let ei = unit(i);
            let cols: Vec<Vec<Rat>> = (0..dim).map(|c| mult(&ei, &unit(c))).collect();
            Matrix::from_fn(dim, dim, |r, c| cols[c][r].clone())
        })
        .collect();
    let gram = Matrix::from_fn(dim, dim, |i, j| (&lmats[i] * &lmats[j]).trace());
    kernel_space(&gram)
}

fn span_products(
    dim: usize,
    mult: &dyn Fn(&[Rat], &[Rat]) -> Vec<Rat>,
    left: &Subspace,
    right: &Subspace,
) -> Subspace {
    let mut vecs = Vec::new();
    for u in left.basis_vectors() {
        for v in right.basis_vectors() {
            vecs.push(mult(&u, &v));
        }
    }
    Subspace::from_vectors(dim, &vecs)
}

/// Build a basic algebra from an abstract multiplication.
///
/// `idem_vecs` must be pairwise orthogonal idempotents summing to the
/// identity of the multiplication; they become the vertices. The routine
/// chooses a uniform basis compatible with the idempotent strata, recovers
/// the Gabriel quiver from rad/rad^2, expresses every basis element as a
/// combination of arrow paths and computes the kernel of the path
/// evaluation as the relation set.
///
/// Returns the algebra together with the coordinate change from the ambient
/// coordinates into the final basis.
pub(crate) fn algebra_from_multiplication(
    vertex_names: Vec<String>,
    idem_vecs: Vec<Vec<Rat>>,
    ambient: usize,
    mult: &dyn Fn(&[Rat], &[Rat]) -> Vec<Rat>,
    label_hint: &dyn Fn(&[Rat]) -> Option<String>,
) -> Result<(AlgebraRef, Matrix)> {
    let nv = vertex_names.len();
    if nv == 0 {
        if ambient != 0 {
            return Err(Error::Presentation(
                "no idempotents but nonzero ambient space".into(),
            ));
        }
        return Ok((FdAlgebra::zero_algebra(), Matrix::zero(0, 0)));
    }
    assert_eq!(idem_vecs.len(), nv);

    let unit = |i: usize| {
        let mut v = vec![Rat::zero(); ambient];
        v[i] = Rat::one();
        v
    };
    let sandwich = |s: usize, x: &[Rat], t: usize| -> Vec<Rat> {
        mult(&idem_vecs[s], &mult(x, &idem_vecs[t]))
    };

    // Uniform basis, stratum by stratum, idempotent first on the diagonal.
    let mut rows: Vec<Vec<Rat>> = Vec::new();
    let mut src = Vec::new();
    let mut tgt = Vec::new();
    let mut idem = vec![usize::MAX; nv];
    for s in 0..nv {
        for t in 0..nv {
            let mut stratum_vecs = Vec::new();
            for k in 0..ambient {
                stratum_vecs.push(sandwich(s, &unit(k), t));
            }
            let stratum = Subspace::from_vectors(ambient, &stratum_vecs);
            let mut chosen: Vec<Vec<Rat>> = Vec::new();
            if s == t {
                idem[s] = rows.len();
                chosen.push(idem_vecs[s].clone());
            }
            for cand in stratum.basis_vectors() {
                let mut test = chosen.clone();
                test.push(cand.clone());
                if Subspace::from_vectors(ambient, &test).dim() == test.len() {
                    chosen.push(cand);
                }
            }
            debug_assert_eq!(chosen.len(), stratum.dim());
            for v in chosen {
                rows.push(v);
                src.push(s);
                tgt.push(t);
            }
        }
    }
    let n = rows.len();
    if n != ambient {
        return Err(Error::Presentation(format!(
            "idempotent strata span {n} of {ambient} dimensions"
        )));
    }

    let basis_matrix = Matrix::from_rows(ambient, rows.clone());
    let to_final = basis_matrix
        .transpose()
        .inverse()
        .ok_or_else(|| Error::Presentation("stratified basis not invertible".into()))?;

    let coords = |x: &[Rat]| to_final.apply(x);
    let from_coords = |c: &[Rat]| -> Vec<Rat> {
        let mut out = vec![Rat::zero(); ambient];
        for (i, ci) in c.iter().enumerate() {
            if !ci.is_zero() {
                for (j, rj) in rows[i].iter().enumerate() {
                    out[j] = &out[j] + ci * rj;
                }
            }
        }
        out
    };
    // Multiplication in the final coordinates.
    let table_mult = |x: &[Rat], y: &[Rat]| -> Vec<Rat> {
        coords(&mult(&from_coords(x), &from_coords(y)))
    };

    let mut mult_table = vec![vec![Vec::new(); n]; n];
    for i in 0..n {
        for j in 0..n {
            if tgt[i] != src[j] {
                continue;
            }
            let prod = coords(&mult(&rows[i], &rows[j]));
            if prod.iter().any(|x| !x.is_zero()) {
                mult_table[i][j] = prod;
            }
        }
    }

    // Labels: vertex idempotents get e<name>, otherwise use the hint.
    let mut labels = vec![String::new(); n];
    for (v, &i) in idem.iter().enumerate() {
        labels[i] = format!("e{}", vertex_names[v]);
    }
    let mut used: Vec<String> = labels.iter().filter(|l| !l.is_empty()).cloned().collect();
    let mut counter = 0usize;
    for i in 0..n {
        if !labels[i].is_empty() {
            continue;
        }
        let mut candidate = label_hint(&rows[i]).unwrap_or_default();
        if candidate.is_empty() || used.contains(&candidate) {
            loop {
                candidate = format!("u{counter}");
                counter += 1;
                if !used.contains(&candidate) {
                    break;
                }
            }
        }
        used.push(candidate.clone());
        labels[i] = candidate;
    }

    // Gabriel quiver: arrows from rad/rad^2, stratum by stratum.
    let rad = radical_of_table(n, &table_mult);
    let rad2 = span_products(n, &table_mult, &rad, &rad);
    let restrict = |space: &Subspace, s: usize, t: usize| -> Subspace {
        let vecs: Vec<Vec<Rat>> = space
            .basis_vectors()
            .iter()
            .map(|v| {
                let mut w = vec![Rat::zero(); n];
                for (i, x) in v.iter().enumerate() {
                    if src[i] == s && tgt[i] == t {
                        w[i] = x.clone();
                    }
                }
                w
            })
            .collect();
        Subspace::from_vectors(n, &vecs)
    };

    let mut arrows = Vec::new();
    let mut arrow_elems: Vec<Vec<Rat>> = Vec::new();
    let mut arrow_counter = 0usize;
    for s in 0..nv {
        for t in 0..nv {
            let rad_st = restrict(&rad, s, t);
            let rad2_st = restrict(&rad2, s, t);
            let q = rad_st.quotient_coords(&rad2_st)?;
            for k in 0..q.rank {
                let elem = q.section.row(k);
                let name = {
                    let unit_label = elem
                        .iter()
                        .enumerate()
                        .filter(|(_, x)| !x.is_zero())
                        .collect::<Vec<_>>();
                    match unit_label.as_slice() {
                        [(i, x)] if x.is_one() && !vertex_names.contains(&labels[*i]) => {
                            labels[*i].clone()
                        }
                        _ => {
                            let mut nm;
                            loop {
                                nm = format!("x{arrow_counter}");
                                arrow_counter += 1;
                                if !vertex_names.contains(&nm)
                                    && !arrows.iter().any(|a: &Arrow| a.name == nm)
                                {
                                    break;
                                }
                            }
                            nm
                        }
                    }
                };
                // guard against duplicated hint names across strata
                let name = if arrows.iter().any(|a: &Arrow| a.name == name)
                    || vertex_names.contains(&name)
                {
                    let mut nm;
                    loop {
                        nm = format!("x{arrow_counter}");
                        arrow_counter += 1;
                        if !vertex_names.contains(&nm)
                            && !arrows.iter().any(|a: &Arrow| a.name == nm)
                        {
                            break;
                        }
                    }
                    nm
                } else {
                    name
                };
                arrows.push(Arrow { name, src: s, tgt: t });
                arrow_elems.push(elem);
            }
        }
    }
    let quiver = Quiver::new(vertex_names.clone(), arrows)?;

    // Express the basis in arrow paths and collect the relations.
    let nilpotency = {
        let mut powers = 0usize;
        let mut cur = rad.clone();
        while !cur.is_zero() {
            powers += 1;
            cur = span_products(n, &table_mult, &cur, &rad);
        }
        powers + 1
    };
    let mut all_paths = Vec::new();
    for len in 0..=nilpotency {
        let batch = quiver.paths_of_length(len);
        if batch.is_empty() && len > 0 {
            break;
        }
        all_paths.extend(batch);
        if all_paths.len() > PRESENTATION_PATH_BUDGET {
            return Err(Error::Presentation("path budget exceeded".into()));
        }
    }
    let evals: Vec<Vec<Rat>> = all_paths
        .iter()
        .map(|p| {
            if p.is_lazy() {
                let mut v = vec![Rat::zero(); n];
                v[idem[p.src]] = Rat::one();
                v
            } else {
                let mut acc = arrow_elems[p.arrows[0]].clone();
                for &a in &p.arrows[1..] {
                    acc = table_mult(&acc, &arrow_elems[a]);
                }
                acc
            }
        })
        .collect();
    let eval_matrix = Matrix::from_fn(n, all_paths.len(), |r, c| evals[c][r].clone());
    if eval_matrix.rank() != n {
        return Err(Error::Presentation(
            "arrow paths do not span the algebra (not elementary over Q)".into(),
        ));
    }
    let mut basis_expr = Vec::with_capacity(n);
    for i in 0..n {
        let mut b = vec![Rat::zero(); n];
        b[i] = Rat::one();
        let sol = eval_matrix
            .solve(&b)
            .expect("surjectivity just checked");
        basis_expr.push(PathComb::new(
            sol.into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(p, c)| (c, all_paths[p].clone()))
                .collect(),
        ));
    }
    let mut relations = Vec::new();
    for s in 0..nv {
        for t in 0..nv {
            let cols: Vec<usize> = (0..all_paths.len())
                .filter(|&p| all_paths[p].src == s && all_paths[p].tgt(&quiver) == t)
                .collect();
            if cols.is_empty() {
                continue;
            }
            let m_st = Matrix::from_fn(n, cols.len(), |r, c| evals[cols[c]][r].clone());
            for coeffs in kernel_space(&m_st).basis_vectors() {
                relations.push(PathComb::new(
                    coeffs
                        .into_iter()
                        .enumerate()
                        .filter(|(_, c)| !c.is_zero())
                        .map(|(k, c)| (c, all_paths[cols[k]].clone()))
                        .collect(),
                ));
            }
        }
    }

    let algebra = FdAlgebra::build(
        quiver,
        labels,
        src,
        tgt,
        mult_table,
        idem,
        arrow_elems,
        basis_expr,
        relations,
    );
    Ok((algebra, to_final))
}
