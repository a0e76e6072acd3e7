use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactla::{column_space, kernel_space, Matrix, Rat, Subspace};
use crate::quiveralg::{AlgebraMorphism, AlgebraRef, Path, PathComb};

/// Right module over a quiver algebra, stored as a representation: one
/// vector space per vertex, one matrix per arrow.
///
/// Matrices act on column vectors, so the matrix of an arrow `a: v -> w` has
/// shape `dims[w] x dims[v]` and a path acts by composing its arrow matrices
/// in reverse traversal order.
#[derive(Clone, Debug)]
pub struct Representation {
    algebra: AlgebraRef,
    dims: Vec<usize>,
    arrow_mats: Vec<Matrix>,
}

impl PartialEq for Representation {
    fn eq(&self, other: &Self) -> bool {
        self.algebra.same_algebra(&other.algebra)
            && self.dims == other.dims
            && self.arrow_mats == other.arrow_mats
    }
}

impl Representation {
    pub fn new(algebra: AlgebraRef, dims: Vec<usize>, arrow_mats: Vec<Matrix>) -> Result<Self> {
        if dims.len() != algebra.vertex_count() || arrow_mats.len() != algebra.quiver().arrows().len()
        {
            return Err(Error::Dimension(
                "representation shape does not match the quiver".into(),
            ));
        }
        for (i, a) in algebra.quiver().arrows().iter().enumerate() {
            arrow_mats[i].check_dims(dims[a.tgt], dims[a.src])?;
        }
        let rep = Representation {
            algebra,
            dims,
            arrow_mats,
        };
        for rel in rep.algebra.relations() {
            let m = rep.eval_comb(rel)?;
            if !m.is_zero() {
                return Err(Error::Presentation(format!(
                    "relation {} does not act by zero",
                    rel.display(rep.algebra.quiver())
                )));
            }
        }
        Ok(rep)
    }

    pub fn zero(algebra: AlgebraRef) -> Self {
        let dims = vec![0; algebra.vertex_count()];
        let arrow_mats = algebra
            .quiver()
            .arrows()
            .iter()
            .map(|_| Matrix::zero(0, 0))
            .collect();
        Representation {
            algebra,
            dims,
            arrow_mats,
        }
    }

    pub fn simple(algebra: AlgebraRef, v: usize) -> Self {
        let mut dims = vec![0; algebra.vertex_count()];
        dims[v] = 1;
        let arrow_mats = algebra
            .quiver()
            .arrows()
            .iter()
            .map(|a| Matrix::zero(dims[a.tgt], dims[a.src]))
            .collect();
        Representation {
            algebra,
            dims,
            arrow_mats,
        }
    }

    /// The projective `e_v A`: vertex spaces spanned by the basis elements
    /// starting at `v`, arrows acting by right multiplication.
    pub fn projective(algebra: AlgebraRef, v: usize) -> Self {
        let strata: Vec<Vec<usize>> = (0..algebra.vertex_count())
            .map(|w| basis_indices(&algebra, v, w))
            .collect();
        let dims: Vec<usize> = strata.iter().map(|s| s.len()).collect();
        let arrow_mats = algebra
            .quiver()
            .arrows()
            .iter()
            .enumerate()
            .map(|(ai, a)| {
                let arr = algebra.arrow_element(ai).to_vec();
                Matrix::from_fn(dims[a.tgt], dims[a.src], |r, c| {
                    let prod = algebra.multiply(&algebra.unit_vector(strata[a.src][c]), &arr);
                    prod[strata[a.tgt][r]].clone()
                })
            })
            .collect();
        Representation {
            algebra,
            dims,
            arrow_mats,
        }
    }

    /// The injective `D(A e_v)`: dual basis of the paths ending at `v`,
    /// arrows acting by the transpose of left multiplication.
    pub fn injective(algebra: AlgebraRef, v: usize) -> Self {
        let strata: Vec<Vec<usize>> = (0..algebra.vertex_count())
            .map(|w| basis_indices(&algebra, w, v))
            .collect();
        let dims: Vec<usize> = strata.iter().map(|s| s.len()).collect();
        let arrow_mats = algebra
            .quiver()
            .arrows()
            .iter()
            .enumerate()
            .map(|(ai, a)| {
                let arr = algebra.arrow_element(ai).to_vec();
                // (xi . a)(m) = xi(a * m) for m a path from tgt(a) to v.
                Matrix::from_fn(dims[a.tgt], dims[a.src], |r, c| {
                    let prod = algebra.multiply(&arr, &algebra.unit_vector(strata[a.tgt][r]));
                    prod[strata[a.src][c]].clone()
                })
            })
            .collect();
        Representation {
            algebra,
            dims,
            arrow_mats,
        }
    }

    pub fn direct_sum(parts: &[&Representation]) -> Result<Self> {
        let Some(first) = parts.first() else {
            return Err(Error::Dimension("direct sum of nothing needs an algebra".into()));
        };
        let algebra = first.algebra.clone();
        for p in parts {
            if !p.algebra.same_algebra(&algebra) {
                return Err(Error::Category("direct sum across algebras".into()));
            }
        }
        let dims: Vec<usize> = (0..algebra.vertex_count())
            .map(|v| parts.iter().map(|p| p.dims[v]).sum())
            .collect();
        let arrow_mats = (0..algebra.quiver().arrows().len())
            .map(|a| {
                let blocks: Vec<&Matrix> = parts.iter().map(|p| &p.arrow_mats[a]).collect();
                Matrix::block_diag(&blocks)
            })
            .collect();
        Ok(Representation {
            algebra,
            dims,
            arrow_mats,
        })
    }

    pub fn algebra(&self) -> &AlgebraRef {
        &self.algebra
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim_at(&self, v: usize) -> usize {
        self.dims[v]
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    pub fn arrow_mat(&self, a: usize) -> &Matrix {
        &self.arrow_mats[a]
    }

    pub fn vertex_offsets(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.dims.len() + 1);
        let mut acc = 0;
        out.push(0);
        for &d in &self.dims {
            acc += d;
            out.push(acc);
        }
        out
    }

    /// Matrix of the right action of a path, `M_src -> M_tgt`.
    pub fn eval_path(&self, p: &Path) -> Matrix {
        if p.is_lazy() {
            return Matrix::identity(self.dims[p.src]);
        }
        let mut acc = self.arrow_mats[p.arrows[0]].clone();
        for &a in &p.arrows[1..] {
            acc = &self.arrow_mats[a] * &acc;
        }
        acc
    }

    pub fn eval_comb(&self, comb: &PathComb) -> Result<Matrix> {
        let (s, t) = comb.endpoints(self.algebra.quiver())?;
        let mut acc = Matrix::zero(self.dims[t], self.dims[s]);
        for (c, p) in &comb.terms {
            acc = &acc + &self.eval_path(p).scale(c);
        }
        Ok(acc)
    }

    /// Matrix of the right action of a basis element, `M_src -> M_tgt`.
    pub fn basis_action(&self, i: usize) -> Matrix {
        self.eval_comb(self.algebra.basis_expression(i))
            .expect("basis expressions are parallel by construction")
    }

    /// Right action of an arbitrary algebra element on the total space.
    pub fn total_action(&self, x: &[Rat]) -> Matrix {
        let offs = self.vertex_offsets();
        let d = self.total_dim();
        let mut out = Matrix::zero(d, d);
        for (i, c) in x.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let s = self.algebra.basis_src(i);
            let t = self.algebra.basis_tgt(i);
            let block = self.basis_action(i);
            for r in 0..block.rows() {
                for cc in 0..block.cols() {
                    let v = out.at(offs[t] + r, offs[s] + cc) + &(c * block.at(r, cc));
                    out.set(offs[t] + r, offs[s] + cc, v);
                }
            }
        }
        out
    }

    /// Sort key used to order summand lists deterministically.
    pub fn sort_key(&self) -> (usize, Vec<usize>, Vec<String>) {
        (
            self.total_dim(),
            self.dims.clone(),
            self.arrow_mats
                .iter()
                .map(|m| format!("{m:?}"))
                .collect(),
        )
    }
}

pub fn basis_indices(algebra: &AlgebraRef, src: usize, tgt: usize) -> Vec<usize> {
    (0..algebra.dim())
        .filter(|&i| algebra.basis_src(i) == src && algebra.basis_tgt(i) == tgt)
        .collect()
}

/// Morphism of representations: one matrix per vertex commuting with all
/// arrow actions.
#[derive(Clone, Debug, PartialEq)]
pub struct RepMap {
    source: Representation,
    target: Representation,
    mats: Vec<Matrix>,
}

impl RepMap {
    pub fn new(source: Representation, target: Representation, mats: Vec<Matrix>) -> Result<Self> {
        if !source.algebra.same_algebra(&target.algebra) {
            return Err(Error::Category("map across algebras".into()));
        }
        if mats.len() != source.dims.len() {
            return Err(Error::Dimension("one matrix per vertex required".into()));
        }
        for (v, m) in mats.iter().enumerate() {
            m.check_dims(target.dims[v], source.dims[v])?;
        }
        let f = RepMap {
            source,
            target,
            mats,
        };
        for (a, arrow) in f.source.algebra.quiver().arrows().iter().enumerate() {
            let lhs = &f.mats[arrow.tgt] * f.source.arrow_mat(a);
            let rhs = f.target.arrow_mat(a) * &f.mats[arrow.src];
            if lhs != rhs {
                return Err(Error::Presentation(format!(
                    "map does not commute with arrow {}",
                    arrow.name
                )));
            }
        }
        Ok(f)
    }

    pub(crate) fn new_unchecked(
        source: Representation,
        target: Representation,
        mats: Vec<Matrix>,
    ) -> Self {
        RepMap {
            source,
            target,
            mats,
        }
    }

    pub fn zero(source: Representation, target: Representation) -> Result<Self> {
        let mats = (0..source.dims.len())
            .map(|v| Matrix::zero(target.dims[v], source.dims[v]))
            .collect();
        RepMap::new(source, target, mats)
    }

    pub fn identity(rep: &Representation) -> Self {
        let mats = rep.dims.iter().map(|&d| Matrix::identity(d)).collect();
        RepMap {
            source: rep.clone(),
            target: rep.clone(),
            mats,
        }
    }

    pub fn source(&self) -> &Representation {
        &self.source
    }

    pub fn target(&self) -> &Representation {
        &self.target
    }

    pub fn mat(&self, v: usize) -> &Matrix {
        &self.mats[v]
    }

    pub fn mats(&self) -> &[Matrix] {
        &self.mats
    }

    /// `self` after `other`: requires `other.target == self.source`.
    pub fn compose(&self, other: &RepMap) -> RepMap {
        assert_eq!(
            self.source.dims, other.target.dims,
            "compose: middle object mismatch"
        );
        let mats = (0..self.mats.len())
            .map(|v| &self.mats[v] * &other.mats[v])
            .collect();
        RepMap {
            source: other.source.clone(),
            target: self.target.clone(),
            mats,
        }
    }

    pub fn add(&self, other: &RepMap) -> RepMap {
        let mats = (0..self.mats.len())
            .map(|v| &self.mats[v] + &other.mats[v])
            .collect();
        RepMap {
            source: self.source.clone(),
            target: self.target.clone(),
            mats,
        }
    }

    pub fn sub(&self, other: &RepMap) -> RepMap {
        let mats = (0..self.mats.len())
            .map(|v| &self.mats[v] - &other.mats[v])
            .collect();
        RepMap {
            source: self.source.clone(),
            target: self.target.clone(),
            mats,
        }
    }

    pub fn scale(&self, c: &Rat) -> RepMap {
        let mats = self.mats.iter().map(|m| m.scale(c)).collect();
        RepMap {
            source: self.source.clone(),
            target: self.target.clone(),
            mats,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.mats.iter().all(|m| m.is_zero())
    }

    pub fn is_injective(&self) -> bool {
        self.mats.iter().all(|m| m.rank() == m.cols())
    }

    pub fn is_surjective(&self) -> bool {
        self.mats.iter().all(|m| m.rank() == m.rows())
    }

    pub fn is_isomorphism(&self) -> bool {
        self.mats.iter().all(Matrix::is_invertible)
    }

    pub fn inverse(&self) -> Option<RepMap> {
        let mut mats = Vec::with_capacity(self.mats.len());
        for m in &self.mats {
            mats.push(m.inverse()?);
        }
        Some(RepMap {
            source: self.target.clone(),
            target: self.source.clone(),
            mats,
        })
    }

    pub fn pow(&self, n: usize) -> RepMap {
        assert_eq!(self.source.dims, self.target.dims);
        let mats = self.mats.iter().map(|m| m.pow(n)).collect();
        RepMap {
            source: self.source.clone(),
            target: self.target.clone(),
            mats,
        }
    }

    /// Flatten into one coordinate vector (vertex by vertex, row-major).
    pub fn flatten(&self) -> Vec<Rat> {
        let mut out = Vec::new();
        for m in &self.mats {
            out.extend_from_slice(m.flat());
        }
        out
    }

    pub fn from_flat(source: &Representation, target: &Representation, flat: &[Rat]) -> RepMap {
        let mut mats = Vec::with_capacity(source.dims.len());
        let mut pos = 0;
        for v in 0..source.dims.len() {
            let (r, c) = (target.dims[v], source.dims[v]);
            let m = Matrix::from_fn(r, c, |i, j| flat[pos + i * c + j].clone());
            pos += r * c;
            mats.push(m);
        }
        RepMap {
            source: source.clone(),
            target: target.clone(),
            mats,
        }
    }
}

/// Subrepresentation carved out by one subspace per vertex (which must be
/// closed under the arrow actions), with its inclusion.
pub fn subrep(m: &Representation, spaces: &[Subspace]) -> (Representation, RepMap) {
    let dims: Vec<usize> = spaces.iter().map(Subspace::dim).collect();
    let arrow_mats: Vec<Matrix> = m
        .algebra
        .quiver()
        .arrows()
        .iter()
        .enumerate()
        .map(|(a, arrow)| {
            Matrix::from_fn(dims[arrow.tgt], dims[arrow.src], |r, c| {
                // c-th basis vector of the source space, pushed through, in
                // coordinates of the target space.
                let img = m.arrow_mats[a].apply(&spaces[arrow.src].basis().row(c));
                spaces[arrow.tgt]
                    .coords(&img)
                    .expect("subspaces not closed under the arrow action")[r]
                    .clone()
            })
        })
        .collect();
    let sub = Representation {
        algebra: m.algebra.clone(),
        dims,
        arrow_mats,
    };
    let incl_mats: Vec<Matrix> = spaces.iter().map(|s| s.basis().transpose()).collect();
    let incl = RepMap {
        source: sub.clone(),
        target: m.clone(),
        mats: incl_mats,
    };
    (sub, incl)
}

/// Quotient of `m` by arrow-closed subspaces, with its projection.
pub fn quotient_rep(m: &Representation, spaces: &[Subspace]) -> (Representation, RepMap) {
    let qmaps: Vec<_> = spaces
        .iter()
        .enumerate()
        .map(|(v, s)| {
            Subspace::full(m.dims[v])
                .quotient_coords(s)
                .expect("full space contains everything")
        })
        .collect();
    let dims: Vec<usize> = qmaps.iter().map(|q| q.rank).collect();
    let arrow_mats: Vec<Matrix> = m
        .algebra
        .quiver()
        .arrows()
        .iter()
        .enumerate()
        .map(|(a, arrow)| {
            // induced map: project(arrow(section(x)))
            &(&qmaps[arrow.tgt].map * &m.arrow_mats[a]) * &qmaps[arrow.src].section.transpose()
        })
        .collect();
    let quot = Representation {
        algebra: m.algebra.clone(),
        dims,
        arrow_mats,
    };
    let proj = RepMap {
        source: m.clone(),
        target: quot.clone(),
        mats: qmaps.into_iter().map(|q| q.map).collect(),
    };
    (quot, proj)
}

/// Kernel, image and cokernel of a map, with their structure maps.
#[derive(Clone, Debug)]
pub struct KernelCokernel {
    pub kernel: Representation,
    pub kernel_incl: RepMap,
    pub image: Representation,
    pub image_incl: RepMap,
    pub cokernel: Representation,
    pub coker_proj: RepMap,
}

pub fn kernel_cokernel(f: &RepMap) -> KernelCokernel {
    let nv = f.source.dims.len();
    let ker_spaces: Vec<Subspace> = (0..nv).map(|v| kernel_space(&f.mats[v])).collect();
    let im_spaces: Vec<Subspace> = (0..nv).map(|v| column_space(&f.mats[v])).collect();
    let (kernel, kernel_incl) = subrep(&f.source, &ker_spaces);
    let (image, image_incl) = subrep(&f.target, &im_spaces);
    let (cokernel, coker_proj) = quotient_rep(&f.target, &im_spaces);
    for v in 0..nv {
        debug_assert_eq!(
            f.mats[v].rank() + kernel.dims[v],
            f.source.dims[v],
            "rank-nullity at vertex {v}"
        );
    }
    KernelCokernel {
        kernel,
        kernel_incl,
        image,
        image_incl,
        cokernel,
        coker_proj,
    }
}

/// View a module over `pi.source()` whose annihilator contains `ker pi` as a
/// module over the factor algebra `pi.target()`.
pub fn restrict_scalars(m: &Representation, pi: &AlgebraMorphism) -> Result<Representation> {
    if !m.algebra.same_algebra(pi.source()) {
        return Err(Error::Category("module not over the morphism source".into()));
    }
    let tgt_alg = pi.target().clone();
    let src_q = m.algebra.quiver();
    let tgt_q = tgt_alg.quiver();
    // match vertices by name
    let vmap: Vec<usize> = tgt_q
        .vertex_names()
        .iter()
        .map(|n| {
            src_q
                .vertex_index(n)
                .ok_or_else(|| Error::Category(format!("vertex {n} missing upstream")))
        })
        .collect::<Result<_>>()?;
    // dims at dropped vertices must vanish
    for v in 0..src_q.vertex_count() {
        let kept = tgt_q.vertex_names().iter().any(|n| n == src_q.vertex_name(v));
        if !kept && m.dims[v] != 0 {
            return Err(Error::Category(format!(
                "module is supported on vertex {} killed by the factor",
                src_q.vertex_name(v)
            )));
        }
    }
    let dims: Vec<usize> = vmap.iter().map(|&v| m.dims[v]).collect();
    let mut arrow_mats = Vec::new();
    for (ai, arrow) in tgt_q.arrows().iter().enumerate() {
        // lift the arrow element through pi and sandwich it to its stratum
        let elem = tgt_alg.arrow_element(ai).to_vec();
        let lift = pi
            .preimage(&elem)
            .ok_or_else(|| Error::Presentation("factor morphism not surjective".into()))?;
        let s = vmap[arrow.src];
        let t = vmap[arrow.tgt];
        let e_s = m.algebra.idempotent(s);
        let e_t = m.algebra.idempotent(t);
        let uniform = m.algebra.multiply(&e_s, &m.algebra.multiply(&lift, &e_t));
        debug_assert_eq!(pi.apply(&uniform), elem);
        // action of the lift, summed over its basis coordinates
        let mut mat = Matrix::zero(m.dims[t], m.dims[s]);
        for (i, c) in uniform.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            debug_assert_eq!(m.algebra.basis_src(i), s);
            debug_assert_eq!(m.algebra.basis_tgt(i), t);
            mat = &mat + &m.basis_action(i).scale(c);
        }
        arrow_mats.push(mat);
    }
    Representation::new(tgt_alg, dims, arrow_mats)
}

/// Canonical modules of an algebra.
#[derive(Clone, Debug)]
pub struct CanonicalModules {
    pub projectives: Vec<Representation>,
    pub injectives: Vec<Representation>,
    pub simples: Vec<Representation>,
    pub regular: Representation,
    pub coregular: Representation,
}

pub fn canonical_modules(algebra: &AlgebraRef) -> CanonicalModules {
    let nv = algebra.vertex_count();
    let projectives: Vec<_> = (0..nv)
        .map(|v| Representation::projective(algebra.clone(), v))
        .collect();
    let injectives: Vec<_> = (0..nv)
        .map(|v| Representation::injective(algebra.clone(), v))
        .collect();
    let simples: Vec<_> = (0..nv)
        .map(|v| Representation::simple(algebra.clone(), v))
        .collect();
    let regular = if nv == 0 {
        Representation::zero(algebra.clone())
    } else {
        Representation::direct_sum(&projectives.iter().collect::<Vec<_>>()).unwrap()
    };
    let coregular = if nv == 0 {
        Representation::zero(algebra.clone())
    } else {
        Representation::direct_sum(&injectives.iter().collect::<Vec<_>>()).unwrap()
    };
    CanonicalModules {
        projectives,
        injectives,
        simples,
        regular,
        coregular,
    }
}

/// Element of `P_v = e_v A` at a vertex: convenience used to build maps out
/// of projectives. The matrix columns of the resulting map send the path
/// basis of `P_v` to its action on the chosen element.
pub fn hom_from_projective(
    algebra: &AlgebraRef,
    v: usize,
    target: &Representation,
    element: &[Rat],
) -> RepMap {
    let proj = Representation::projective(algebra.clone(), v);
    assert_eq!(element.len(), target.dims[v], "element lives at vertex v");
    let mats: Vec<Matrix> = (0..algebra.vertex_count())
        .map(|w| {
            let idx = basis_indices(algebra, v, w);
            Matrix::from_fn(target.dims[w], idx.len(), |r, c| {
                let action = target.basis_action(idx[c]); // M_v -> M_w
                action.apply(element)[r].clone()
            })
        })
        .collect();
    RepMap::new_unchecked(proj, target.clone(), mats)
}

/// Direct sum of projectives with the given multiplicities (vertex order,
/// copies consecutive).
pub fn realize_projectives(algebra: &AlgebraRef, mults: &[usize]) -> Representation {
    let mut parts = Vec::new();
    for (v, &k) in mults.iter().enumerate() {
        for _ in 0..k {
            parts.push(Representation::projective(algebra.clone(), v));
        }
    }
    if parts.is_empty() {
        Representation::zero(algebra.clone())
    } else {
        Representation::direct_sum(&parts.iter().collect::<Vec<_>>()).unwrap()
    }
}

/// Direct sum of injectives with the given multiplicities.
pub fn realize_injectives(algebra: &AlgebraRef, mults: &[usize]) -> Representation {
    let mut parts = Vec::new();
    for (v, &k) in mults.iter().enumerate() {
        for _ in 0..k {
            parts.push(Representation::injective(algebra.clone(), v));
        }
    }
    if parts.is_empty() {
        Representation::zero(algebra.clone())
    } else {
        Representation::direct_sum(&parts.iter().collect::<Vec<_>>()).unwrap()
    }
}

/// Assemble a map out of a direct sum from maps out of each summand.
pub fn map_from_summands(sum: &Representation, pieces: &[RepMap], target: &Representation) -> RepMap {
    let nv = sum.dims().len();
    let mats: Vec<Matrix> = (0..nv)
        .map(|v| {
            let mut m = Matrix::zero(target.dims()[v], 0);
            for p in pieces {
                m = m.hstack(p.mat(v));
            }
            debug_assert_eq!(m.cols(), sum.dims()[v]);
            m
        })
        .collect();
    RepMap::new_unchecked(sum.clone(), target.clone(), mats)
}

/// Assemble a map into a direct sum from maps into each summand.
pub fn map_into_summands(source: &Representation, pieces: &[RepMap], sum: &Representation) -> RepMap {
    let nv = sum.dims().len();
    let mats: Vec<Matrix> = (0..nv)
        .map(|v| {
            let mut m = Matrix::zero(0, source.dims()[v]);
            for p in pieces {
                m = m.vstack(p.mat(v));
            }
            debug_assert_eq!(m.rows(), sum.dims()[v]);
            m
        })
        .collect();
    RepMap::new_unchecked(source.clone(), sum.clone(), mats)
}

/// Is the identity expressible in the given maps (used as a sanity check).
pub fn contains_identity(maps: &[RepMap], rep: &Representation) -> bool {
    let id = RepMap::identity(rep);
    let cols: Vec<Vec<Rat>> = maps.iter().map(RepMap::flatten).collect();
    if cols.is_empty() {
        return rep.total_dim() == 0;
    }
    let rows = cols[0].len();
    let m = Matrix::from_fn(rows, cols.len(), |r, c| cols[c][r].clone());
    m.solve(&id.flatten()).is_some()
}
