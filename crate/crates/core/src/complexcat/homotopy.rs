use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactla::{kernel_basis, Matrix, QuotientMap, Rat, SpanSolver, Subspace};
use crate::modcat::{coords_in_basis, hom_space, RepMap, Representation};

use super::complex::TwoTermComplex;

/// A chain map between two-term complexes: components in degrees -1 and 0.
#[derive(Clone, Debug)]
pub struct ChainPair {
    pub fm1: RepMap,
    pub f0: RepMap,
}

impl ChainPair {
    pub fn new(fm1: RepMap, f0: RepMap) -> Self {
        ChainPair { fm1, f0 }
    }

    pub fn identity(t: &TwoTermComplex) -> Self {
        ChainPair {
            fm1: RepMap::identity(t.term_minus1()),
            f0: RepMap::identity(t.term_zero()),
        }
    }

    pub fn zero(src: &TwoTermComplex, tgt: &TwoTermComplex) -> Self {
        ChainPair {
            fm1: RepMap::zero(src.term_minus1().clone(), tgt.term_minus1().clone()).unwrap(),
            f0: RepMap::zero(src.term_zero().clone(), tgt.term_zero().clone()).unwrap(),
        }
    }

    pub fn compose(&self, other: &ChainPair) -> ChainPair {
        ChainPair {
            fm1: self.fm1.compose(&other.fm1),
            f0: self.f0.compose(&other.f0),
        }
    }

    pub fn add(&self, other: &ChainPair) -> ChainPair {
        ChainPair {
            fm1: self.fm1.add(&other.fm1),
            f0: self.f0.add(&other.f0),
        }
    }

    pub fn sub(&self, other: &ChainPair) -> ChainPair {
        ChainPair {
            fm1: self.fm1.sub(&other.fm1),
            f0: self.f0.sub(&other.f0),
        }
    }

    pub fn scale(&self, c: &Rat) -> ChainPair {
        ChainPair {
            fm1: self.fm1.scale(c),
            f0: self.f0.scale(c),
        }
    }

    pub fn pow(&self, n: usize) -> ChainPair {
        ChainPair {
            fm1: self.fm1.pow(n),
            f0: self.f0.pow(n),
        }
    }

    pub fn is_chain_map(&self, src: &TwoTermComplex, tgt: &TwoTermComplex) -> bool {
        let lhs = self.f0.compose(src.diff());
        let rhs = tgt.diff().compose(&self.fm1);
        lhs.mats() == rhs.mats()
    }

    pub fn is_componentwise_iso(&self) -> bool {
        self.fm1.is_isomorphism() && self.f0.is_isomorphism()
    }
}

/// A class in a homotopy Hom space, given by one representative.
#[derive(Clone, Debug)]
pub enum ChainMapRep {
    /// shift 0 with complex target
    Pair(ChainPair),
    /// single-component cases (shifted Homs and stalk targets)
    Single(RepMap),
}

impl ChainMapRep {
    pub fn pair(&self) -> &ChainPair {
        match self {
            ChainMapRep::Pair(p) => p,
            ChainMapRep::Single(_) => panic!("expected a pair representative"),
        }
    }

    pub fn single(&self) -> &RepMap {
        match self {
            ChainMapRep::Single(f) => f,
            ChainMapRep::Pair(_) => panic!("expected a single-component representative"),
        }
    }
}

#[derive(Clone, Debug)]
enum HomShape {
    /// pairs (f^{-1}: sm1 -> tm1, f^0: s0 -> t0)
    Pair {
        sm1: Representation,
        s0: Representation,
        tm1: Representation,
        t0: Representation,
    },
    /// single component s -> t
    Single { s: Representation, t: Representation },
}

/// Hom space in the homotopy category between a two-term complex and a
/// shifted two-term complex or stalk module, with representatives of a
/// basis of classes and exact class-coordinate reduction.
#[derive(Clone, Debug)]
pub struct HomotopyHom {
    shift: i32,
    shape: HomShape,
    /// quotient of the chain space by null-homotopic maps
    qmap: QuotientMap,
    class_reps: Vec<ChainMapRep>,
    amb_m1_solver: Option<SpanSolver>,
    amb_0_solver: Option<SpanSolver>,
    chain_solver: Option<SpanSolver>,
}

impl HomotopyHom {
    pub fn dim(&self) -> usize {
        self.class_reps.len()
    }

    pub fn shift(&self) -> i32 {
        self.shift
    }

    pub fn class_reps(&self) -> &[ChainMapRep] {
        &self.class_reps
    }

    pub fn is_zero(&self) -> bool {
        self.class_reps.is_empty()
    }

    fn zero_rep(&self) -> ChainMapRep {
        match &self.shape {
            HomShape::Pair { sm1, s0, tm1, t0 } => ChainMapRep::Pair(ChainPair {
                fm1: RepMap::zero(sm1.clone(), tm1.clone()).unwrap(),
                f0: RepMap::zero(s0.clone(), t0.clone()).unwrap(),
            }),
            HomShape::Single { s, t } => {
                ChainMapRep::Single(RepMap::zero(s.clone(), t.clone()).unwrap())
            }
        }
    }

    fn ambient_coords(&self, rep: &ChainMapRep) -> Option<Vec<Rat>> {
        match (&self.shape, rep) {
            (HomShape::Pair { .. }, ChainMapRep::Pair(p)) => {
                let a = match &self.amb_m1_solver {
                    None => {
                        if p.fm1.is_zero() {
                            Vec::new()
                        } else {
                            return None;
                        }
                    }
                    Some(sv) => sv.solve(&p.fm1.flatten())?,
                };
                let b = match &self.amb_0_solver {
                    None => {
                        if p.f0.is_zero() {
                            Vec::new()
                        } else {
                            return None;
                        }
                    }
                    Some(sv) => sv.solve(&p.f0.flatten())?,
                };
                let mut v = a;
                v.extend(b);
                Some(v)
            }
            (HomShape::Single { .. }, ChainMapRep::Single(f)) => match &self.amb_0_solver {
                None => {
                    if f.is_zero() {
                        Some(Vec::new())
                    } else {
                        None
                    }
                }
                Some(sv) => sv.solve(&f.flatten()),
            },
            _ => None,
        }
    }

    /// Class coordinates of an arbitrary representative chain map.
    pub fn reduce(&self, rep: &ChainMapRep) -> Option<Vec<Rat>> {
        let amb = self.ambient_coords(rep)?;
        let Some(solver) = &self.chain_solver else {
            return if amb.iter().all(Rat::is_zero) {
                Some(Vec::new())
            } else {
                None
            };
        };
        let chain_coords = solver.solve(&amb)?;
        Some(self.qmap.map.apply(&chain_coords))
    }

    pub fn is_null(&self, rep: &ChainMapRep) -> bool {
        self.reduce(rep)
            .map(|v| v.iter().all(Rat::is_zero))
            .unwrap_or(false)
    }

    /// Representative of the class with the given coordinates.
    pub fn class_combination(&self, coords: &[Rat]) -> ChainMapRep {
        assert_eq!(coords.len(), self.dim());
        let mut acc: Option<ChainMapRep> = None;
        for (i, c) in coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let term = match &self.class_reps[i] {
                ChainMapRep::Pair(p) => ChainMapRep::Pair(p.scale(c)),
                ChainMapRep::Single(f) => ChainMapRep::Single(f.scale(c)),
            };
            acc = Some(match (acc, term) {
                (None, t) => t,
                (Some(ChainMapRep::Pair(a)), ChainMapRep::Pair(b)) => {
                    ChainMapRep::Pair(a.add(&b))
                }
                (Some(ChainMapRep::Single(a)), ChainMapRep::Single(b)) => {
                    ChainMapRep::Single(a.add(&b))
                }
                _ => unreachable!("mixed representative shapes"),
            });
        }
        acc.unwrap_or_else(|| self.zero_rep())
    }
}


fn make_solvers(
    basis_m1: &[RepMap],
    basis_0: &[RepMap],
    chain_basis: &[Vec<Rat>],
) -> (Option<SpanSolver>, Option<SpanSolver>, Option<SpanSolver>) {
    let col_solver = |basis: &[RepMap]| -> Option<SpanSolver> {
        if basis.is_empty() {
            None
        } else {
            let cols: Vec<Vec<Rat>> = basis.iter().map(RepMap::flatten).collect();
            Some(SpanSolver::from_columns(cols[0].len(), &cols))
        }
    };
    let chain = if chain_basis.is_empty() {
        None
    } else {
        Some(SpanSolver::from_columns(chain_basis[0].len(), chain_basis))
    };
    (col_solver(basis_m1), col_solver(basis_0), chain)
}

pub enum HomTarget<'a> {
    Complex(&'a TwoTermComplex),
    Stalk(&'a Representation),
}

/// `Hom_K(t, u[shift])` for `shift` in {-1, 0, 1}. Higher shifts vanish for
/// two-term complexes and are rejected rather than silently reported zero.
pub fn hom_k(t: &TwoTermComplex, target: HomTarget, shift: i32) -> Result<HomotopyHom> {
    if !(-1..=1).contains(&shift) {
        return Err(Error::OutOfRange(format!(
            "shift {shift} outside {{-1, 0, 1}} (higher shifts vanish for two-term complexes)"
        )));
    }
    match target {
        HomTarget::Complex(u) => {
            if !t.algebra().same_algebra(u.algebra()) {
                return Err(Error::Category("Hom between different algebras".into()));
            }
            match shift {
                0 => hom_complex_0(t, u),
                1 => Ok(single_shifted_hom(
                    t.term_minus1().clone(),
                    u.term_zero().clone(),
                    1,
                    // every map is a chain map into the shift
                    None,
                    // null: d_u . h and g . d_t
                    {
                        let mut nulls = Vec::new();
                        for h in hom_space(t.term_minus1(), u.term_minus1())? {
                            nulls.push(u.diff().compose(&h));
                        }
                        for g in hom_space(t.term_zero(), u.term_zero())? {
                            nulls.push(g.compose(t.diff()));
                        }
                        nulls
                    },
                )?),
                -1 => Ok(single_shifted_hom(
                    t.term_zero().clone(),
                    u.term_minus1().clone(),
                    -1,
                    Some(Box::new(|g: &RepMap| {
                        let mut v = g.compose(t.diff()).flatten();
                        v.extend(u.diff().compose(g).flatten());
                        v
                    })),
                    Vec::new(),
                )?),
                _ => unreachable!(),
            }
        }
        HomTarget::Stalk(m) => {
            if !t.algebra().same_algebra(m.algebra()) {
                return Err(Error::Category("Hom between different algebras".into()));
            }
            match shift {
                0 => Ok(single_shifted_hom(
                    t.term_zero().clone(),
                    m.clone(),
                    0,
                    Some(Box::new(|g: &RepMap| g.compose(t.diff()).flatten())),
                    Vec::new(),
                )?),
                1 => Ok(single_shifted_hom(
                    t.term_minus1().clone(),
                    m.clone(),
                    1,
                    None,
                    hom_space(t.term_zero(), m)?
                        .into_iter()
                        .map(|g| g.compose(t.diff()))
                        .collect(),
                )?),
                -1 => Ok(single_shifted_hom(
                    t.term_zero().clone(),
                    Representation::zero(m.algebra().clone()),
                    -1,
                    None,
                    Vec::new(),
                )?),
                _ => unreachable!(),
            }
        }
    }
}

type ConditionFn<'a> = Box<dyn Fn(&RepMap) -> Vec<Rat> + 'a>;

/// Shared construction for the single-component Hom shapes: ambient module
/// maps `s -> t`, an optional linear condition that must vanish, and a list
/// of null-homotopic maps to quotient out.
fn single_shifted_hom(
    s: Representation,
    t: Representation,
    shift: i32,
    condition: Option<ConditionFn<'_>>,
    nulls: Vec<RepMap>,
) -> Result<HomotopyHom> {
    let ambient = hom_space(&s, &t)?;
    let n = ambient.len();
    let chain_basis: Vec<Vec<Rat>> = match (&condition, n) {
        (_, 0) => Vec::new(),
        (None, _) => identity_coords(n),
        (Some(cond), _) => {
            let cols: Vec<Vec<Rat>> = ambient.iter().map(|g| cond(g)).collect();
            let rows = cols[0].len();
            if rows == 0 {
                identity_coords(n)
            } else {
                let sys = Matrix::from_fn(rows, n, |r, c| cols[c][r].clone());
                kernel_basis(&sys)
            }
        }
    };
    let mut null_in_chain = Vec::new();
    if !chain_basis.is_empty() {
        let chain_mat = Matrix::from_fn(n, chain_basis.len(), |r, c| chain_basis[c][r].clone());
        for g in &nulls {
            let amb = coords_in_basis(g, &ambient).expect("null map is a module map");
            let coords = chain_mat
                .solve(&amb)
                .expect("null-homotopic maps satisfy the chain condition");
            null_in_chain.push(coords);
        }
    }
    let (qmap, sections) = quotient_structure(chain_basis.len(), &null_in_chain);
    let class_reps: Vec<ChainMapRep> = sections
        .iter()
        .map(|sec| {
            let mut amb = vec![Rat::zero(); n];
            for (i, c) in sec.iter().enumerate() {
                if !c.is_zero() {
                    for (j, x) in chain_basis[i].iter().enumerate() {
                        amb[j] = &amb[j] + c * x;
                    }
                }
            }
            ChainMapRep::Single(combine_maps(&ambient, &amb, &s, &t))
        })
        .collect();
    let (amb_m1_solver, amb_0_solver, chain_solver) =
        make_solvers(&[], &ambient, &chain_basis);
    Ok(HomotopyHom {
        shift,
        shape: HomShape::Single { s, t },
        qmap,
        class_reps,
        amb_m1_solver,
        amb_0_solver,
        chain_solver,
    })
}

fn identity_coords(n: usize) -> Vec<Vec<Rat>> {
    (0..n)
        .map(|i| {
            let mut v = vec![Rat::zero(); n];
            v[i] = crate::exactla::rat(1);
            v
        })
        .collect()
}

fn combine_maps(
    basis: &[RepMap],
    coords: &[Rat],
    src: &Representation,
    tgt: &Representation,
) -> RepMap {
    let mut acc = RepMap::zero(src.clone(), tgt.clone()).unwrap();
    for (i, c) in coords.iter().enumerate() {
        if !c.is_zero() {
            acc = acc.add(&basis[i].scale(c));
        }
    }
    acc
}

fn quotient_structure(
    chain_dim: usize,
    null_vectors: &[Vec<Rat>],
) -> (QuotientMap, Vec<Vec<Rat>>) {
    let htpy = Subspace::from_vectors(chain_dim, null_vectors);
    let q = Subspace::full(chain_dim)
        .quotient_coords(&htpy)
        .expect("null space is contained in the chain space");
    let sections = (0..q.rank).map(|i| q.section.row(i)).collect();
    (q, sections)
}

fn hom_complex_0(t: &TwoTermComplex, u: &TwoTermComplex) -> Result<HomotopyHom> {
    let basis_m1 = hom_space(t.term_minus1(), u.term_minus1())?;
    let basis_0 = hom_space(t.term_zero(), u.term_zero())?;
    let p = basis_m1.len();
    let q = basis_0.len();
    let shape = HomShape::Pair {
        sm1: t.term_minus1().clone(),
        s0: t.term_zero().clone(),
        tm1: u.term_minus1().clone(),
        t0: u.term_zero().clone(),
    };
    // chain condition: f^0 . d_t - d_u . f^{-1} = 0 as maps T^{-1} -> U^0
    let mut cols: Vec<Vec<Rat>> = Vec::with_capacity(p + q);
    for h in &basis_m1 {
        let composed = u.diff().compose(h);
        cols.push(composed.flatten().iter().map(|x| -x.clone()).collect());
    }
    for g in &basis_0 {
        cols.push(g.compose(t.diff()).flatten());
    }
    let flat_len = cols.first().map(Vec::len).unwrap_or(0);
    let chain_basis: Vec<Vec<Rat>> = if p + q == 0 {
        Vec::new()
    } else if flat_len == 0 {
        identity_coords(p + q)
    } else {
        let sys = Matrix::from_fn(flat_len, p + q, |r, c| cols[c][r].clone());
        kernel_basis(&sys)
    };
    let homotopies = hom_space(t.term_zero(), u.term_minus1())?;
    let mut null_in_chain = Vec::new();
    if !chain_basis.is_empty() {
        let chain_mat = Matrix::from_fn(p + q, chain_basis.len(), |r, c| {
            chain_basis[c][r].clone()
        });
        for h in &homotopies {
            let a = coords_in_basis(&h.compose(t.diff()), &basis_m1)
                .expect("h . d is a module map");
            let b = coords_in_basis(&u.diff().compose(h), &basis_0)
                .expect("d . h is a module map");
            let mut v = a;
            v.extend(b);
            let coords = chain_mat
                .solve(&v)
                .expect("null-homotopic maps are chain maps");
            null_in_chain.push(coords);
        }
    }
    let (qmap, sections) = quotient_structure(chain_basis.len(), &null_in_chain);
    let class_reps: Vec<ChainMapRep> = sections
        .iter()
        .map(|sec| {
            let mut amb = vec![Rat::zero(); p + q];
            for (i, c) in sec.iter().enumerate() {
                if !c.is_zero() {
                    for (j, x) in chain_basis[i].iter().enumerate() {
                        amb[j] = &amb[j] + c * x;
                    }
                }
            }
            let fm1 = combine_maps(&basis_m1, &amb[..p], t.term_minus1(), u.term_minus1());
            let f0 = combine_maps(&basis_0, &amb[p..], t.term_zero(), u.term_zero());
            debug_assert!(ChainPair::new(fm1.clone(), f0.clone()).is_chain_map(t, u));
            ChainMapRep::Pair(ChainPair { fm1, f0 })
        })
        .collect();
    let (amb_m1_solver, amb_0_solver, chain_solver) =
        make_solvers(&basis_m1, &basis_0, &chain_basis);
    Ok(HomotopyHom {
        shift: 0,
        shape,
        qmap,
        class_reps,
        amb_m1_solver,
        amb_0_solver,
        chain_solver,
    })
}
