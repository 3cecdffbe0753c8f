//! Chain complexes of free modules, homology, and induced maps.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::rings::{Elem, RingSpec};

use super::matrix::MatrixR;
use super::module::ModulePresentation;
use super::snf::{smith_normal_form, SmithForm};

/// `C_top -> ... -> C_1 -> C_0` with `d_q : C_q -> C_{q-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainComplexR {
    ring: RingSpec,
    ranks: Vec<usize>,
    /// `boundaries[q - 1]` is `d_q`.
    boundaries: Vec<MatrixR>,
}

impl ChainComplexR {
    /// Validates shapes and `d_{q-1} d_q = 0`.
    pub fn new(ring: &RingSpec, ranks: Vec<usize>, boundaries: Vec<MatrixR>) -> Result<Self> {
        if ranks.is_empty() {
            return Err(Error::MalformedComplex("no degrees".into()));
        }
        if boundaries.len() + 1 != ranks.len() {
            return Err(Error::MalformedComplex(format!("{} boundary maps for {} degrees", boundaries.len(), ranks.len())));
        }
        for (i, d) in boundaries.iter().enumerate() {
            let q = i + 1;
            if d.ring() != ring {
                return Err(Error::RingMismatch(ring.clone(), d.ring().clone()));
            }
            if d.rows() != ranks[q - 1] || d.cols() != ranks[q] {
                return Err(Error::MalformedComplex(format!(
                    "d_{q} is {}x{}, expected {}x{}",
                    d.rows(),
                    d.cols(),
                    ranks[q - 1],
                    ranks[q]
                )));
            }
        }
        for q in 2..ranks.len() {
            if !boundaries[q - 2].mul(&boundaries[q - 1])?.is_zero() {
                return Err(Error::MalformedComplex(format!("d_{} d_{q} != 0", q - 1)));
            }
        }
        Ok(ChainComplexR { ring: ring.clone(), ranks, boundaries })
    }

    pub fn ring(&self) -> &RingSpec {
        &self.ring
    }

    pub fn top(&self) -> usize {
        self.ranks.len() - 1
    }

    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    /// Rank in degree `q`, zero outside the stored range.
    pub fn rank(&self, q: usize) -> usize {
        self.ranks.get(q).copied().unwrap_or(0)
    }

    /// `d_q`, as a zero matrix where it is not stored.
    pub fn boundary(&self, q: usize) -> MatrixR {
        if q >= 1 && q <= self.top() {
            self.boundaries[q - 1].clone()
        } else {
            let rows = if q == 0 { 0 } else { self.rank(q - 1) };
            MatrixR::zeros(&self.ring, rows, self.rank(q))
        }
    }

    pub fn boundary_ref(&self, q: usize) -> Option<&MatrixR> {
        if q >= 1 && q <= self.top() {
            Some(&self.boundaries[q - 1])
        } else {
            None
        }
    }

    /// Keeps degrees `0..=top`.
    pub fn truncate(&self, top: usize) -> ChainComplexR {
        let top = top.min(self.top());
        ChainComplexR { ring: self.ring.clone(), ranks: self.ranks[..=top].to_vec(), boundaries: self.boundaries[..top].to_vec() }
    }

    /// Base change of an integer complex.
    pub fn change_ring(&self, target: &RingSpec) -> Result<ChainComplexR> {
        let boundaries = self.boundaries.iter().map(|d| d.change_ring(target)).collect::<Result<_>>()?;
        Ok(ChainComplexR { ring: target.clone(), ranks: self.ranks.clone(), boundaries })
    }

    pub fn homology(&self, q: usize) -> ModulePresentation {
        self.subquotient(q).module().clone()
    }

    /// All homology modules in degrees `0..=top`.
    pub fn homology_all(&self) -> Vec<ModulePresentation> {
        (0..=self.top()).map(|q| self.homology(q)).collect()
    }

    /// `ker d_q / im d_{q+1}` with explicit generators.
    pub fn subquotient(&self, q: usize) -> Subquotient {
        Subquotient::new(&self.boundary(q), &self.boundary(q + 1))
    }

    /// `Cone_n = A_{n-1} + B_n` with `d(a, b) = (-d a, f a + d b)`.
    pub fn mapping_cone(f: &ChainMapR) -> Result<ChainComplexR> {
        let (a, b) = (&f.source, &f.target);
        let ring = a.ring.clone();
        let top = (a.top() + 1).max(b.top());
        if f.components.len() <= a.top() {
            return Err(Error::MalformedComplex("chain map does not cover the source".into()));
        }
        let rank = |n: usize| if n == 0 { b.rank(0) } else { a.rank(n - 1) + b.rank(n) };
        let ranks: Vec<usize> = (0..=top).map(rank).collect();
        let mut boundaries = Vec::new();
        for n in 1..=top {
            let mut d = MatrixR::zeros(&ring, ranks[n - 1], ranks[n]);
            let a_off_row = if n >= 2 { a.rank(n - 2) } else { 0 };
            let a_cols = a.rank(n - 1);
            // -d^A_{n-1} in the top-left block
            if n >= 2 {
                let da = a.boundary(n - 1);
                for i in 0..da.rows() {
                    for j in 0..da.cols() {
                        d.set(i, j, ring.neg(da.get(i, j)));
                    }
                }
            }
            // f_{n-1} in the bottom-left block
            if a_cols > 0 {
                let fc = f.component(n - 1);
                for i in 0..fc.rows() {
                    for j in 0..fc.cols() {
                        d.set(a_off_row + i, j, fc.get(i, j).clone());
                    }
                }
            }
            // d^B_n in the bottom-right block
            let db = b.boundary(n);
            for i in 0..db.rows() {
                for j in 0..db.cols() {
                    d.set(a_off_row + i, a_cols + j, db.get(i, j).clone());
                }
            }
            boundaries.push(d);
        }
        ChainComplexR::new(&ring, ranks, boundaries)
    }
}

/// `ker(d_q) / im(d_{q+1})` inside the ambient free module `C_q`, with
/// canonical generators: torsion generators in Smith order, then free ones.
#[derive(Clone, Debug)]
pub struct Subquotient {
    ring: RingSpec,
    ambient: usize,
    kernel: MatrixR,
    /// Left inverse of `kernel` on cycles.
    kernel_coords: MatrixR,
    quotient: SmithForm,
    /// `(Smith index, relation)` per generator; relation zero for free ones.
    slots: Vec<(usize, Elem)>,
    generators: Vec<Vec<Elem>>,
    module: ModulePresentation,
}

impl Subquotient {
    /// `ker(d_out) / im(d_in)` where `d_in` lands in the domain of `d_out`.
    pub fn new(d_out: &MatrixR, d_in: &MatrixR) -> Subquotient {
        let ring = d_out.ring().clone();
        let ambient = d_out.cols();
        let s = smith_normal_form(d_out);
        let kernel = s.kernel_basis();
        let kernel_coords = s.v_inv.select_rows(s.rank()..ambient);
        Subquotient::from_kernel(&ring, ambient, kernel, kernel_coords, d_in)
    }

    /// `span(kernel) / span(relations)`, where `kernel_coords` is a left
    /// inverse of `kernel` and the relation columns lie in its span.
    pub fn from_kernel(
        ring: &RingSpec,
        ambient: usize,
        kernel: MatrixR,
        kernel_coords: MatrixR,
        relations: &MatrixR,
    ) -> Subquotient {
        let z = kernel.cols();
        let x = kernel_coords.mul(relations).expect("shapes agree");
        let quotient = smith_normal_form(&x);
        let r = quotient.rank();
        let mut slots = Vec::new();
        for (i, d) in quotient.diagonal().into_iter().enumerate() {
            if !ring.is_unit(&d) {
                slots.push((i, d));
            }
        }
        for i in r..z {
            slots.push((i, ring.zero()));
        }
        let gen_matrix = kernel.mul(&quotient.u_inv).expect("shapes agree");
        let generators = slots.iter().map(|&(i, _)| gen_matrix.column(i)).collect();
        let module = ModulePresentation::from_diagonal(ring, z - r, &quotient.diagonal());
        Subquotient { ring: ring.clone(), ambient, kernel, kernel_coords, quotient, slots, generators, module }
    }

    pub fn ring(&self) -> &RingSpec {
        &self.ring
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn module(&self) -> &ModulePresentation {
        &self.module
    }

    pub fn generators(&self) -> &[Vec<Elem>] {
        &self.generators
    }

    pub fn kernel(&self) -> &MatrixR {
        &self.kernel
    }

    /// Relation of each generator (zero for free generators).
    pub fn relations(&self) -> Vec<Elem> {
        self.slots.iter().map(|(_, d)| d.clone()).collect()
    }

    /// Coordinates of the class of a cycle against [`Self::generators`],
    /// torsion coordinates reduced.
    pub fn coords(&self, cycle: &[Elem]) -> Result<Vec<Elem>> {
        let kc = self.kernel_coords.mul_vec(cycle)?;
        if self.kernel.mul_vec(&kc)? != cycle {
            return Err(Error::Defect("vector is not a cycle".into()));
        }
        let y = self.quotient.u.mul_vec(&kc)?;
        Ok(self
            .slots
            .iter()
            .map(
                |(i, d)| {
                    if self.ring.is_zero(d) {
                        y[*i].clone()
                    } else {
                        self.ring.divmod(&y[*i], d).expect("nonzero relation").1
                    }
                },
            )
            .collect())
    }

    /// Whether the cycle represents zero.
    pub fn is_boundary(&self, cycle: &[Elem]) -> Result<bool> {
        Ok(self.coords(cycle)?.iter().all(|e| self.ring.is_zero(e)))
    }
}

/// A module map between two canonically presented modules, in generator
/// coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyMap {
    pub matrix: MatrixR,
    pub source_relations: Vec<Elem>,
    pub target_relations: Vec<Elem>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct MapFlags {
    pub injective: bool,
    pub surjective: bool,
}

impl MapFlags {
    pub fn iso(&self) -> bool {
        self.injective && self.surjective
    }
}

fn diag_matrix(ring: &RingSpec, rel: &[Elem]) -> MatrixR {
    let n = rel.len();
    MatrixR::from_fn(ring, n, n, |i, j| if i == j { rel[i].clone() } else { ring.zero() })
}

fn in_relations(ring: &RingSpec, v: &[Elem], rel: &[Elem]) -> bool {
    v.iter().zip(rel).all(|(x, d)| ring.divides(d, x))
}

impl HomologyMap {
    /// The map induced by an ambient matrix `f` between two subquotients.
    pub fn induced(source: &Subquotient, target: &Subquotient, f: &MatrixR) -> Result<HomologyMap> {
        if f.rows() != target.ambient || f.cols() != source.ambient {
            return Err(Error::Shape(format!(
                "map {}x{} between ambients {} and {}",
                f.rows(),
                f.cols(),
                source.ambient,
                target.ambient
            )));
        }
        let ring = source.ring.clone();
        let mut cols = Vec::new();
        for g in &source.generators {
            cols.push(target.coords(&f.mul_vec(g)?)?);
        }
        let matrix = MatrixR::from_columns(&ring, target.generators.len(), &cols);
        Ok(HomologyMap { matrix, source_relations: source.relations(), target_relations: target.relations() })
    }

    pub fn ring(&self) -> &RingSpec {
        self.matrix.ring()
    }

    /// `[M | Rel_target]`.
    fn with_target_relations(&self) -> MatrixR {
        let ring = self.ring();
        let rel = diag_matrix(ring, &self.target_relations);
        MatrixR::hstack(ring, self.matrix.rows(), &[&self.matrix, &rel]).expect("shapes agree")
    }

    pub fn is_surjective(&self) -> bool {
        let ring = self.ring();
        let s = smith_normal_form(&self.with_target_relations());
        s.rank() == self.matrix.rows() && s.diagonal().iter().all(|d| ring.is_unit(d))
    }

    /// Source vectors mapping into the target relations (the kernel, before
    /// dividing by source relations), as columns.
    fn kernel_lattice(&self) -> MatrixR {
        let k = smith_normal_form(&self.with_target_relations()).kernel_basis();
        k.select_rows(0..self.matrix.cols())
    }

    pub fn is_injective(&self) -> bool {
        let ring = self.ring().clone();
        let k = self.kernel_lattice();
        (0..k.cols()).all(|j| in_relations(&ring, &k.column(j), &self.source_relations))
    }

    pub fn flags(&self) -> MapFlags {
        MapFlags { injective: self.is_injective(), surjective: self.is_surjective() }
    }

    /// The zero map.
    pub fn is_zero(&self) -> bool {
        let ring = self.ring();
        (0..self.matrix.cols()).all(|j| in_relations(ring, &self.matrix.column(j), &self.target_relations))
    }
}

/// Exactness of `A --f--> B --g--> C` at `B`: `im f = ker g`.
pub fn is_exact_at(f: &HomologyMap, g: &HomologyMap) -> Result<bool> {
    if f.target_relations != g.source_relations || f.matrix.rows() != g.matrix.cols() {
        return Err(Error::Shape("maps do not compose".into()));
    }
    let ring = f.ring().clone();
    let nb = f.matrix.rows();
    let rel_b = diag_matrix(&ring, &f.target_relations);
    let image = MatrixR::hstack(&ring, nb, &[&f.matrix, &rel_b])?;
    // im f inside ker g
    for j in 0..image.cols() {
        let gv = g.matrix.mul_vec(&image.column(j))?;
        if !in_relations(&ring, &gv, &g.target_relations) {
            return Ok(false);
        }
    }
    // ker g inside im f
    let solver = smith_normal_form(&image);
    let ker = g.kernel_lattice();
    for j in 0..ker.cols() {
        if solver.solve(&ker.column(j)).is_none() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A degreewise map of complexes commuting with the boundaries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainMapR {
    source: ChainComplexR,
    target: ChainComplexR,
    components: Vec<MatrixR>,
}

impl ChainMapR {
    /// Components in degrees `0..components.len()`; commutation is verified
    /// wherever both sides are defined.
    pub fn new(source: ChainComplexR, target: ChainComplexR, components: Vec<MatrixR>) -> Result<Self> {
        if source.ring != target.ring {
            return Err(Error::RingMismatch(source.ring.clone(), target.ring.clone()));
        }
        for (q, f) in components.iter().enumerate() {
            if f.rows() != target.rank(q) || f.cols() != source.rank(q) {
                return Err(Error::MalformedComplex(format!(
                    "f_{q} is {}x{}, expected {}x{}",
                    f.rows(),
                    f.cols(),
                    target.rank(q),
                    source.rank(q)
                )));
            }
            if q >= 1 {
                let lhs = target.boundary(q).mul(f)?;
                let rhs = components[q - 1].mul(&source.boundary(q))?;
                if lhs != rhs {
                    return Err(Error::MalformedComplex(format!("chain map does not commute in degree {q}")));
                }
            }
        }
        Ok(ChainMapR { source, target, components })
    }

    pub fn identity(c: &ChainComplexR) -> ChainMapR {
        let components = (0..=c.top()).map(|q| MatrixR::identity(&c.ring, c.rank(q))).collect();
        ChainMapR { source: c.clone(), target: c.clone(), components }
    }

    pub fn source(&self) -> &ChainComplexR {
        &self.source
    }

    pub fn target(&self) -> &ChainComplexR {
        &self.target
    }

    pub fn components(&self) -> &[MatrixR] {
        &self.components
    }

    /// `f_q`, zero where not stored.
    pub fn component(&self, q: usize) -> MatrixR {
        self.components
            .get(q)
            .cloned()
            .unwrap_or_else(|| MatrixR::zeros(&self.source.ring, self.target.rank(q), self.source.rank(q)))
    }

    pub fn change_ring(&self, target: &RingSpec) -> Result<ChainMapR> {
        Ok(ChainMapR {
            source: self.source.change_ring(target)?,
            target: self.target.change_ring(target)?,
            components: self.components.iter().map(|m| m.change_ring(target)).collect::<Result<_>>()?,
        })
    }
}

/// The induced map `H_q(f)` on canonical generators.
pub fn induced_homology_map(f: &ChainMapR, q: usize) -> Result<(HomologyMap, MapFlags)> {
    let s = f.source.subquotient(q);
    let t = f.target.subquotient(q);
    let m = HomologyMap::induced(&s, &t, &f.component(q))?;
    let flags = m.flags();
    Ok((m, flags))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z() -> RingSpec {
        RingSpec::Integers
    }

    /// `Z --n--> Z --0--> Z` in degrees 2, 1, 0.
    fn multiplication_complex(ring: &RingSpec, n: i64) -> ChainComplexR {
        ChainComplexR::new(ring, vec![1, 1, 1], vec![MatrixR::from_i64(ring, &[vec![0]]), MatrixR::from_i64(ring, &[vec![n]])])
            .unwrap()
    }

    #[test]
    fn homology_of_multiplication_complex() {
        let c = multiplication_complex(&z(), 6);
        let h: Vec<String> = c.homology_all().iter().map(ToString::to_string).collect();
        assert_eq!(h, ["Z", "Z/6", "0"]);
        let f3 = RingSpec::mod_p(3).unwrap();
        let c = multiplication_complex(&f3, 6);
        let h: Vec<String> = c.homology_all().iter().map(ToString::to_string).collect();
        assert_eq!(h, ["Z/3", "Z/3", "Z/3"]);
    }

    #[test]
    fn zero_complex_is_free() {
        let c = ChainComplexR::new(&z(), vec![2, 3], vec![MatrixR::zeros(&z(), 2, 3)]).unwrap();
        assert_eq!(c.homology(0).to_string(), "Z^2");
        assert_eq!(c.homology(1).to_string(), "Z^3");
    }

    #[test]
    fn nonzero_square_is_rejected() {
        let one = MatrixR::from_i64(&z(), &[vec![1]]);
        assert!(matches!(ChainComplexR::new(&z(), vec![1, 1, 1], vec![one.clone(), one]), Err(Error::MalformedComplex(_))));
    }

    #[test]
    fn circle_double_cover_map() {
        let circle = ChainComplexR::new(&z(), vec![1, 1], vec![MatrixR::zeros(&z(), 1, 1)]).unwrap();
        let f = ChainMapR::new(
            circle.clone(),
            circle.clone(),
            vec![MatrixR::from_i64(&z(), &[vec![1]]), MatrixR::from_i64(&z(), &[vec![2]])],
        )
        .unwrap();
        let (m, flags) = induced_homology_map(&f, 1).unwrap();
        assert_eq!(m.matrix, MatrixR::from_i64(&z(), &[vec![2]]));
        assert!(flags.injective && !flags.surjective);
        let (_, flags) = induced_homology_map(&ChainMapR::identity(&circle), 1).unwrap();
        assert!(flags.iso());
    }

    #[test]
    fn quotient_map_on_torsion() {
        // Z/4 -> Z/2 on H_1 of the multiplication complexes
        let c4 = multiplication_complex(&z(), 4).truncate(1);
        let c2 = multiplication_complex(&z(), 2).truncate(1);
        let c4 = ChainComplexR::new(&z(), vec![1, 1, 1], vec![c4.boundary(1), MatrixR::from_i64(&z(), &[vec![4]])]).unwrap();
        let c2 = ChainComplexR::new(&z(), vec![1, 1, 1], vec![c2.boundary(1), MatrixR::from_i64(&z(), &[vec![2]])]).unwrap();
        let f = ChainMapR::new(
            c4,
            c2,
            vec![MatrixR::from_i64(&z(), &[vec![1]]), MatrixR::from_i64(&z(), &[vec![1]]), MatrixR::from_i64(&z(), &[vec![2]])],
        )
        .unwrap();
        let (_, flags) = induced_homology_map(&f, 1).unwrap();
        assert!(flags.surjective && !flags.injective);
    }

    #[test]
    fn exactness_of_short_sequence() {
        // Z --2--> Z --> Z/2 is exact in the middle; Z --4--> Z --> Z/2 is not
        let free = vec![z().zero()];
        let two = vec![z().from_i64(2)];
        let g =
            HomologyMap { matrix: MatrixR::from_i64(&z(), &[vec![1]]), source_relations: free.clone(), target_relations: two };
        let f2 = HomologyMap {
            matrix: MatrixR::from_i64(&z(), &[vec![2]]),
            source_relations: free.clone(),
            target_relations: free.clone(),
        };
        let f4 =
            HomologyMap { matrix: MatrixR::from_i64(&z(), &[vec![4]]), source_relations: free.clone(), target_relations: free };
        assert!(is_exact_at(&f2, &g).unwrap());
        assert!(!is_exact_at(&f4, &g).unwrap());
    }

    #[test]
    fn cone_of_identity_is_acyclic() {
        let c = multiplication_complex(&z(), 3);
        let cone = ChainComplexR::mapping_cone(&ChainMapR::identity(&c)).unwrap();
        assert!(cone.homology_all().iter().all(ModulePresentation::is_zero));
    }
}
