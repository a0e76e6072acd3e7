use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;

use crate::error::{Error, Result};
use crate::exactla::{column_space, kernel_space, rat, Matrix, Rat, Subspace};
use crate::quiveralg::present::radical_of_table;

use super::hom::{coords_in_basis, hom_space};
use super::rep::{subrep, RepMap, Representation};

pub const DEFAULT_SEED: u64 = 0x7117_1ab5;

/// Monic minimal polynomial of a square matrix, coefficients low to high.
pub fn min_poly(m: &Matrix) -> Vec<Rat> {
    let d = m.rows();
    if d == 0 {
        return vec![Rat::zero(), Rat::one()]; // x
    }
    let mut powers: Vec<Matrix> = vec![Matrix::identity(d)];
    let mut span = crate::exactla::IncrementalSpan::new();
    span.insert(powers[0].flat());
    loop {
        let k = powers.len();
        let next = &powers[k - 1] * m;
        if span.contains(next.flat()) {
            let cols: Vec<&[Rat]> = powers.iter().map(|p| p.flat()).collect();
            let sys = Matrix::from_fn(d * d, k, |r, c| cols[c][r].clone());
            let sol = sys.solve(next.flat()).expect("dependence just detected");
            let mut coeffs = vec![Rat::zero(); k + 1];
            for (i, a) in sol.into_iter().enumerate() {
                coeffs[i] = -a;
            }
            coeffs[k] = Rat::one();
            return coeffs;
        }
        span.insert(next.flat());
        powers.push(next);
    }
}

fn divisors_bounded(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    if n.is_zero() {
        return vec![];
    }
    let mut divs = Vec::new();
    let cap: BigInt = BigInt::from(1_000_000u64);
    let mut d = BigInt::one();
    while &d * &d <= n && d <= cap {
        if (&n % &d).is_zero() {
            divs.push(d.clone());
            divs.push(&n / &d);
        }
        d += BigInt::one();
    }
    divs.sort();
    divs.dedup();
    divs
}

/// All rational roots of a polynomial with rational coefficients
/// (low-to-high), via the rational root theorem.
pub fn rational_roots(coeffs: &[Rat]) -> Vec<Rat> {
    let mut c = coeffs.to_vec();
    while c.last().map(|x| x.is_zero()).unwrap_or(false) {
        c.pop();
    }
    if c.len() <= 1 {
        return vec![];
    }
    let mut lcm = BigInt::one();
    for x in &c {
        let d = x.denom();
        let g = num_integer::Integer::gcd(&lcm, d);
        lcm = &lcm / &g * d;
    }
    let ints: Vec<BigInt> = c.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
    let mut roots = Vec::new();
    let mut low = 0;
    while ints[low].is_zero() {
        low += 1;
    }
    if low > 0 {
        roots.push(Rat::zero());
    }
    let a0 = &ints[low];
    let alead = ints.last().unwrap();
    let eval = |x: &Rat| -> Rat {
        let mut acc = Rat::zero();
        for coeff in c.iter().rev() {
            acc = acc * x + coeff;
        }
        acc
    };
    for p in divisors_bounded(a0) {
        for q in divisors_bounded(alead) {
            for sign in [1i64, -1] {
                let cand = Rat::new(&p * BigInt::from(sign), q.clone());
                if eval(&cand).is_zero() && !roots.contains(&cand) {
                    roots.push(cand.clone());
                }
            }
        }
    }
    roots.sort();
    roots
}

/// Composition table of an endomorphism algebra over its Hom basis.
pub(crate) struct EndTable {
    pub basis: Vec<RepMap>,
    solver: Option<crate::exactla::SpanSolver>,
}

impl EndTable {
    pub fn new(m: &Representation) -> Result<Self> {
        let basis = hom_space(m, m)?;
        let solver = if basis.is_empty() {
            None
        } else {
            let cols: Vec<Vec<Rat>> = basis.iter().map(RepMap::flatten).collect();
            Some(crate::exactla::SpanSolver::from_columns(cols[0].len(), &cols))
        };
        Ok(EndTable { basis, solver })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn mult(&self, x: &[Rat], y: &[Rat]) -> Vec<Rat> {
        let fx = combine(&self.basis, x);
        let fy = combine(&self.basis, y);
        let composed = fx.compose(&fy);
        self.solver
            .as_ref()
            .expect("nonzero algebra")
            .solve(&composed.flatten())
            .expect("End is closed under composition")
    }

    pub fn radical(&self) -> Subspace {
        let n = self.dim();
        radical_of_table(n, &|x: &[Rat], y: &[Rat]| self.mult(x, y))
    }

    pub fn identity_coords(&self) -> Vec<Rat> {
        let id = RepMap::identity(self.basis[0].source());
        coords_in_basis(&id, &self.basis).expect("identity is an endomorphism")
    }
}

pub(crate) fn combine(basis: &[RepMap], coords: &[Rat]) -> RepMap {
    let mut acc: Option<RepMap> = None;
    for (i, c) in coords.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let term = basis[i].scale(c);
        acc = Some(match acc {
            None => term,
            Some(a) => a.add(&term),
        });
    }
    acc.unwrap_or_else(|| {
        RepMap::zero(basis[0].source().clone(), basis[0].target().clone()).unwrap()
    })
}

/// Try to produce a nontrivial idempotent from the center of table/rad by
/// rational spectral projection and Newton lifting. Works over any
/// associative table; `one` is the identity in table coordinates.
pub(crate) fn lift_central_idempotent_table(
    n: usize,
    table: &dyn Fn(&[Rat], &[Rat]) -> Vec<Rat>,
    one: &[Rat],
    rad: &Subspace,
    rng: &mut ChaCha20Rng,
) -> Result<Option<Vec<Rat>>> {
    let full = Subspace::full(n);
    let q = full.quotient_coords(rad)?;
    let s_dim = q.rank;
    if s_dim <= 1 {
        return Ok(None);
    }
    let sec = |x: &[Rat]| -> Vec<Rat> {
        let mut out = vec![Rat::zero(); n];
        for (i, c) in x.iter().enumerate() {
            if !c.is_zero() {
                for (j, s) in q.section.row(i).iter().enumerate() {
                    out[j] = &out[j] + c * s;
                }
            }
        }
        out
    };
    let s_mult = |x: &[Rat], y: &[Rat]| -> Vec<Rat> { q.map.apply(&table(&sec(x), &sec(y))) };
    let one_s = q.map.apply(one);
    // center of the semisimple quotient
    let mut rows = Vec::new();
    for i in 0..s_dim {
        let mut ei = vec![Rat::zero(); s_dim];
        ei[i] = Rat::one();
        for r in 0..s_dim {
            let mut row = vec![Rat::zero(); s_dim];
            for (k, slot) in row.iter_mut().enumerate() {
                let mut ek = vec![Rat::zero(); s_dim];
                ek[k] = Rat::one();
                let left = s_mult(&ek, &ei);
                let right = s_mult(&ei, &ek);
                *slot = &left[r] - &right[r];
            }
            rows.push(row);
        }
    }
    let center = if rows.is_empty() {
        Subspace::full(s_dim)
    } else {
        kernel_space(&Matrix::from_rows(s_dim, rows))
    };
    if center.dim() <= 1 {
        return Ok(None);
    }
    for _ in 0..20 {
        let coords: Vec<Rat> = (0..center.dim())
            .map(|_| rat(rng.gen_range(-4..=4)))
            .collect();
        let mut z = vec![Rat::zero(); s_dim];
        for (i, c) in coords.iter().enumerate() {
            for (j, b) in center.basis().row(i).iter().enumerate() {
                z[j] = &z[j] + c * b;
            }
        }
        let lz = Matrix::from_fn(s_dim, s_dim, |r, c| {
            let mut ec = vec![Rat::zero(); s_dim];
            ec[c] = Rat::one();
            s_mult(&z, &ec)[r].clone()
        });
        let poly = min_poly(&lz);
        let roots = rational_roots(&poly);
        if roots.len() < 2 || roots.len() + 1 != poly.len() {
            continue;
        }
        // Lagrange projector onto the first eigenvalue
        let lambda0 = &roots[0];
        let mut e = one_s.clone();
        for mu in roots.iter().skip(1) {
            let scale = Rat::one() / (lambda0 - mu);
            let mut shifted = z.clone();
            for (k, o) in one_s.iter().enumerate() {
                shifted[k] = &shifted[k] - mu * o;
            }
            e = s_mult(&e, &shifted).iter().map(|x| x * &scale).collect();
        }
        if e.iter().all(|x| x.is_zero()) {
            continue;
        }
        // lift along the nilpotent radical: Newton iteration
        let mut lifted = sec(&e);
        for _ in 0..(n + 2) {
            let sq = table(&lifted, &lifted);
            if sq == lifted {
                break;
            }
            let cube = table(&sq, &lifted);
            lifted = sq
                .iter()
                .zip(cube.iter())
                .map(|(s, c)| rat(3) * s - rat(2) * c)
                .collect();
        }
        if table(&lifted, &lifted) != lifted {
            continue;
        }
        if lifted.iter().all(|x| x.is_zero()) || lifted == one {
            continue;
        }
        return Ok(Some(lifted));
    }
    Ok(None)
}

/// Split `m` along an endomorphism with a known rational eigenvalue:
/// `m = ker (f - lambda)^N (+) im (f - lambda)^N`; returns the pieces with
/// their inclusions.
fn fitting_split(
    m: &Representation,
    f: &RepMap,
    lambda: &Rat,
) -> Option<((Representation, RepMap), (Representation, RepMap))> {
    let shifted = {
        let id = RepMap::identity(m);
        f.sub(&id.scale(lambda))
    };
    let n = m.total_dim();
    let power = shifted.pow(n);
    let nv = m.dims().len();
    let ker_spaces: Vec<Subspace> = (0..nv).map(|v| kernel_space(power.mat(v))).collect();
    let im_spaces: Vec<Subspace> = (0..nv).map(|v| column_space(power.mat(v))).collect();
    let kdim: usize = ker_spaces.iter().map(Subspace::dim).sum();
    if kdim == 0 || kdim == n {
        return None;
    }
    Some((subrep(m, &ker_spaces), subrep(m, &im_spaces)))
}

fn candidate_endos(end: &EndTable, rng: &mut ChaCha20Rng, tries: usize) -> Vec<RepMap> {
    let mut out = Vec::new();
    out.extend(end.basis.iter().cloned());
    let b = end.basis.len();
    for i in 0..b.min(6) {
        for j in (i + 1)..b.min(6) {
            out.push(end.basis[i].add(&end.basis[j]));
            out.push(end.basis[i].sub(&end.basis[j]));
        }
    }
    for _ in 0..tries {
        let coords: Vec<Rat> = (0..b).map(|_| rat(rng.gen_range(-3..=3))).collect();
        if coords.iter().any(|c| !c.is_zero()) {
            out.push(combine(&end.basis, &coords));
        }
    }
    out
}

/// Indecomposable pieces of `m` together with their inclusions.
fn decompose_leaves(
    m: &Representation,
    incl: RepMap,
    rng: &mut ChaCha20Rng,
) -> Result<Vec<(Representation, RepMap)>> {
    if m.total_dim() == 0 {
        return Ok(Vec::new());
    }
    let end = EndTable::new(m)?;
    if end.dim() == 1 {
        return Ok(vec![(m.clone(), incl)]);
    }
    let split = |k: (Representation, RepMap),
                     i: (Representation, RepMap),
                     rng: &mut ChaCha20Rng|
     -> Result<Vec<(Representation, RepMap)>> {
        let (krep, kincl) = k;
        let (irep, iincl) = i;
        let mut leaves = decompose_leaves(&krep, incl.compose(&kincl), rng)?;
        leaves.extend(decompose_leaves(&irep, incl.compose(&iincl), rng)?);
        Ok(leaves)
    };
    for f in candidate_endos(&end, rng, 30) {
        let total = Matrix::block_diag(&f.mats().iter().collect::<Vec<_>>());
        for lambda in rational_roots(&min_poly(&total)) {
            if let Some((k, i)) = fitting_split(m, &f, &lambda) {
                return split(k, i, rng);
            }
        }
    }
    let rad = end.radical();
    let semisimple_dim = end.dim() - rad.dim();
    if semisimple_dim == 1 {
        return Ok(vec![(m.clone(), incl)]);
    }
    let one = end.identity_coords();
    if let Some(e) = lift_central_idempotent_table(
        end.dim(),
        &|x: &[Rat], y: &[Rat]| end.mult(x, y),
        &one,
        &rad,
        rng,
    )? {
        let phi = combine(&end.basis, &e);
        let nv = m.dims().len();
        let ker: Vec<Subspace> = (0..nv).map(|v| kernel_space(phi.mat(v))).collect();
        let im: Vec<Subspace> = (0..nv).map(|v| column_space(phi.mat(v))).collect();
        let kdim: usize = ker.iter().map(Subspace::dim).sum();
        if kdim > 0 && kdim < m.total_dim() {
            return split(subrep(m, &ker), subrep(m, &im), rng);
        }
    }
    Err(Error::NonSplitEndomorphism(format!(
        "semisimple quotient of End has dimension {semisimple_dim} > 1 and resists splitting"
    )))
}

/// Indecomposable summands with explicit inclusions into `m`. The images of
/// the inclusions decompose `m` as an internal direct sum.
pub fn decompose_tracked(
    m: &Representation,
    seed: u64,
) -> Result<Vec<(Representation, RepMap)>> {
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    decompose_leaves(m, RepMap::identity(m), &mut rng)
}

/// Decompose into indecomposables with multiplicities; deterministic for a
/// fixed seed, output sorted by dimension vector then matrix content.
pub fn decompose_with_seed(
    m: &Representation,
    seed: u64,
) -> Result<Vec<(Representation, usize)>> {
    let leaves = decompose_tracked(m, seed)?;
    let mut groups: Vec<(Representation, usize)> = Vec::new();
    for (leaf, _) in leaves {
        let mut found = false;
        for (rep, count) in groups.iter_mut() {
            if indec_iso(&leaf, rep)? {
                *count += 1;
                found = true;
                break;
            }
        }
        if !found {
            groups.push((leaf, 1));
        }
    }
    groups.sort_by(|a, b| a.0.sort_key().cmp(&b.0.sort_key()));
    debug_assert_eq!(
        groups.iter().map(|(r, c)| r.total_dim() * c).sum::<usize>(),
        m.total_dim()
    );
    Ok(groups)
}

pub fn decompose(m: &Representation) -> Result<Vec<(Representation, usize)>> {
    decompose_with_seed(m, DEFAULT_SEED)
}

pub fn is_indecomposable(m: &Representation, seed: u64) -> Result<bool> {
    let d = decompose_with_seed(m, seed)?;
    Ok(d.len() == 1 && m.total_dim() > 0 && d[0].1 == 1)
}

/// Certified isomorphism test for indecomposables with local endomorphism
/// rings: an iso exists iff some pairwise composite of Hom bases is
/// invertible.
pub fn indec_iso(m: &Representation, n: &Representation) -> Result<bool> {
    Ok(iso_map(m, n)?.is_some())
}

/// An explicit isomorphism between indecomposables, when one exists.
pub fn iso_map(m: &Representation, n: &Representation) -> Result<Option<RepMap>> {
    if m.dims() != n.dims() {
        return Ok(None);
    }
    if m.total_dim() == 0 {
        return Ok(Some(RepMap::zero(m.clone(), n.clone())?));
    }
    let mn = hom_space(m, n)?;
    let nm = hom_space(n, m)?;
    if mn.is_empty() || nm.is_empty() {
        return Ok(None);
    }
    for f in &mn {
        for g in &nm {
            if f.compose(g).is_isomorphism() {
                return Ok(Some(f.clone()));
            }
        }
    }
    Ok(None)
}

/// Greedily split off copies of the given indecomposables. Returns the
/// complement after no more copies split, together with the copy counts.
/// The remainder is zero exactly when `m` lies in the additive closure of
/// the parts.
pub fn split_off_copies(
    m: &Representation,
    parts: &[Representation],
) -> Result<(Representation, Vec<usize>)> {
    let mut current = m.clone();
    let mut counts = vec![0usize; parts.len()];
    'outer: loop {
        if current.total_dim() == 0 {
            break;
        }
        for (pi, s) in parts.iter().enumerate() {
            if s.total_dim() == 0 || s.total_dim() > current.total_dim() {
                continue;
            }
            let into = hom_space(s, &current)?;
            if into.is_empty() {
                continue;
            }
            let back = hom_space(&current, s)?;
            for u in &into {
                for v in &back {
                    let w = v.compose(u);
                    if !w.is_isomorphism() {
                        continue;
                    }
                    let w_inv = w.inverse().expect("just checked");
                    let e = u.compose(&w_inv).compose(v);
                    let nv = current.dims().len();
                    let ker: Vec<Subspace> =
                        (0..nv).map(|x| kernel_space(e.mat(x))).collect();
                    let (rem, _) = subrep(&current, &ker);
                    debug_assert_eq!(rem.total_dim() + s.total_dim(), current.total_dim());
                    current = rem;
                    counts[pi] += 1;
                    continue 'outer;
                }
            }
        }
        break;
    }
    Ok((current, counts))
}

/// Isomorphism test via full decomposition; works for arbitrary modules.
pub fn is_isomorphic(m: &Representation, n: &Representation, seed: u64) -> Result<bool> {
    if m.dims() != n.dims() {
        return Ok(false);
    }
    let dm = decompose_with_seed(m, seed)?;
    let dn = decompose_with_seed(n, seed)?;
    if dm.len() != dn.len() {
        return Ok(false);
    }
    let mut used = vec![false; dn.len()];
    for (rm, cm) in &dm {
        let mut matched = false;
        for (j, (rn, cn)) in dn.iter().enumerate() {
            if !used[j] && cm == cn && indec_iso(rm, rn)? {
                used[j] = true;
                matched = true;
                break;
            }
        }
        if !matched {
            return Ok(false);
        }
    }
    Ok(true)
}
