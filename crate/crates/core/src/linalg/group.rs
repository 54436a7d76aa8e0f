use std::fmt;

use num_integer::Integer;
use num_traits::{One, Zero};

use super::lattice::{check_len, Lattice};
use super::smith::{smith_with, Track};
use super::{Int, IntMatrix, LinalgError};

/// A finitely generated abelian group presented as a subquotient `Z / B` of
/// some ambient `Z^n`, with the map from ambient cycles to coordinates.
///
/// Coordinates list the free generators first and then the torsion
/// generators in increasing order of invariant factor. A free coordinate is
/// any integer; a torsion coordinate is a residue in `[0, d)`.
#[derive(Clone, Debug)]
pub struct FgAbGroup {
    cycles: Lattice,
    relations: IntMatrix,
    orders: Vec<Int>,
    free_rank: usize,
    class_rows: IntMatrix,
    generators: IntMatrix,
}

impl FgAbGroup {
    /// The group `Z^n` with the standard basis.
    pub fn free(n: usize) -> Self {
        FgAbGroup {
            cycles: Lattice::full(n),
            relations: IntMatrix::zeros(n, 0),
            orders: vec![Int::zero(); n],
            free_rank: n,
            class_rows: IntMatrix::identity(n),
            generators: IntMatrix::identity(n),
        }
    }

    fn build(cycles: Lattice, relations: IntMatrix) -> Result<Self, LinalgError> {
        let c = cycles.coords_of_columns(&relations).map_err(|column| LinalgError::IncompatibleComplex { column })?;
        let p = smith_with(&c, Track::LEFT);
        let rank = p.rank();
        let (u, u_inv) = (p.u.unwrap(), p.u_inv.unwrap());
        let mut keep: Vec<usize> = (rank..c.rows()).collect();
        let free_rank = keep.len();
        let mut orders = vec![Int::zero(); free_rank];
        for (i, d) in p.diagonal.iter().enumerate() {
            if !d.is_one() {
                keep.push(i);
                orders.push(d.clone());
            }
        }
        let class_rows = IntMatrix::from_fn(keep.len(), c.rows(), |i, j| u[(keep[i], j)].clone());
        let generators = cycles.basis().mul(&u_inv.select_columns(&keep))?;
        Ok(FgAbGroup { cycles, relations, orders, free_rank, class_rows, generators })
    }

    pub fn ambient_dim(&self) -> usize {
        self.cycles.ambient_dim()
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    /// Invariant factors greater than one, each dividing the next.
    pub fn torsion(&self) -> &[Int] {
        &self.orders[self.free_rank..]
    }

    /// Number of coordinates: free rank plus number of torsion factors.
    pub fn num_generators(&self) -> usize {
        self.orders.len()
    }

    /// Order of each generator, with `0` for free generators.
    pub fn orders(&self) -> &[Int] {
        &self.orders
    }

    pub fn is_trivial(&self) -> bool {
        self.orders.is_empty()
    }

    pub fn is_isomorphic(&self, other: &FgAbGroup) -> bool {
        self.orders == other.orders
    }

    /// Ambient cycles representing the generators, as columns.
    pub fn generators(&self) -> &IntMatrix {
        &self.generators
    }

    /// Generators of the relation subgroup, as columns.
    pub fn relations(&self) -> &IntMatrix {
        &self.relations
    }

    pub fn cycle_lattice(&self) -> &Lattice {
        &self.cycles
    }

    pub fn is_cycle(&self, z: &[Int]) -> bool {
        self.cycles.contains(z)
    }

    /// Coordinates of the class of the ambient cycle `z`.
    pub fn class_of(&self, z: &[Int]) -> Result<Vec<Int>, LinalgError> {
        check_len(z, self.ambient_dim())?;
        let c = self.cycles.coords(z).ok_or(LinalgError::NotInLattice)?;
        Ok(self.reduce(self.class_rows.mul_vec(&c)?))
    }

    /// Brings coordinates into normal form (torsion entries into `[0, d)`).
    pub fn reduce(&self, mut x: Vec<Int>) -> Vec<Int> {
        for (xi, d) in x.iter_mut().zip(&self.orders) {
            if !d.is_zero() {
                *xi = xi.mod_floor(d);
            }
        }
        x
    }

    pub fn zero(&self) -> Vec<Int> {
        vec![Int::zero(); self.num_generators()]
    }

    pub fn is_zero(&self, x: &[Int]) -> bool {
        self.reduce(x.to_vec()).iter().all(Zero::is_zero)
    }

    pub fn add(&self, a: &[Int], b: &[Int]) -> Vec<Int> {
        self.reduce(a.iter().zip(b).map(|(x, y)| x + y).collect())
    }

    /// An ambient cycle in the class with the given coordinates.
    pub fn representative(&self, x: &[Int]) -> Result<Vec<Int>, LinalgError> {
        check_len(x, self.num_generators())?;
        self.generators.mul_vec(x)
    }
}

impl fmt::Display for FgAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        format_group(f, self.free_rank, self.torsion())
    }
}

pub(crate) fn format_group(f: &mut impl fmt::Write, free_rank: usize, torsion: &[Int]) -> fmt::Result {
    let mut parts = Vec::new();
    match free_rank {
        0 => {}
        1 => parts.push("Z".to_string()),
        r => parts.push(format!("Z^{r}")),
    }
    parts.extend(torsion.iter().map(|d| format!("Z/{d}")));
    if parts.is_empty() {
        write!(f, "0")
    } else {
        write!(f, "{}", parts.join(" ⊕ "))
    }
}

/// `Ker(kernel_of) / Im(image_of)` over the integers.
pub fn subquotient_group(kernel_of: &IntMatrix, image_of: &IntMatrix) -> Result<FgAbGroup, LinalgError> {
    check_composable(kernel_of, image_of)?;
    FgAbGroup::build(Lattice::kernel(kernel_of), image_of.clone())
}

/// The same subquotient with coefficients reduced mod `k`: cycles are the
/// vectors mapped to `0 mod k`, relations are the image plus `k Z^n`.
pub fn subquotient_group_mod(kernel_of: &IntMatrix, image_of: &IntMatrix, k: &Int) -> Result<FgAbGroup, LinalgError> {
    check_composable(kernel_of, image_of)?;
    let n = image_of.rows();
    let relations = image_of.hstack(&IntMatrix::scalar(n, k.clone()))?;
    FgAbGroup::build(Lattice::kernel_mod(kernel_of, k), relations)
}

fn check_composable(kernel_of: &IntMatrix, image_of: &IntMatrix) -> Result<(), LinalgError> {
    if kernel_of.cols() != image_of.rows() {
        return Err(LinalgError::Shape(format!(
            "kernel map has {} columns but image map has {} rows",
            kernel_of.cols(),
            image_of.rows()
        )));
    }
    Ok(())
}

/// A homomorphism between presented groups, acting on coordinates.
#[derive(Clone, Debug)]
pub struct GroupHom {
    pub domain: FgAbGroup,
    pub codomain: FgAbGroup,
    matrix: IntMatrix,
}

impl GroupHom {
    /// Builds from the images of the generators of `domain`, given as
    /// coordinates in `codomain`. Each image must be killed by the order of
    /// its generator.
    pub fn from_images(domain: &FgAbGroup, codomain: &FgAbGroup, images: &[Vec<Int>]) -> Result<Self, LinalgError> {
        if images.len() != domain.num_generators() {
            return Err(LinalgError::Shape(format!(
                "{} images for {} generators",
                images.len(),
                domain.num_generators()
            )));
        }
        let mut cols = Vec::with_capacity(images.len());
        for (j, (img, order)) in images.iter().zip(domain.orders()).enumerate() {
            check_len(img, codomain.num_generators())?;
            let killed: Vec<Int> = img.iter().map(|x| x * order).collect();
            if !codomain.is_zero(&codomain.reduce(killed)) {
                return Err(LinalgError::NotChainMap(format!("image of generator {j} has the wrong order")));
            }
            cols.push(codomain.reduce(img.clone()));
        }
        Ok(GroupHom {
            domain: domain.clone(),
            codomain: codomain.clone(),
            matrix: IntMatrix::from_columns(codomain.num_generators(), &cols),
        })
    }

    pub fn identity(g: &FgAbGroup) -> Self {
        GroupHom { domain: g.clone(), codomain: g.clone(), matrix: IntMatrix::identity(g.num_generators()) }
    }

    /// Matrix whose column `j` holds the image of generator `j`, reduced.
    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn apply(&self, x: &[Int]) -> Result<Vec<Int>, LinalgError> {
        check_len(x, self.domain.num_generators())?;
        Ok(self.codomain.reduce(self.matrix.mul_vec(x)?))
    }

    /// `self ∘ first`.
    pub fn compose(&self, first: &GroupHom) -> Result<GroupHom, LinalgError> {
        if first.codomain.num_generators() != self.domain.num_generators() {
            return Err(LinalgError::Shape("homomorphisms are not composable".into()));
        }
        let raw = self.matrix.mul(&first.matrix)?;
        Ok(GroupHom {
            domain: first.domain.clone(),
            codomain: self.codomain.clone(),
            matrix: reduce_columns(&self.codomain, &raw),
        })
    }

    pub fn is_identity(&self) -> bool {
        self.domain.num_generators() == self.codomain.num_generators()
            && self.matrix == reduce_columns(&self.codomain, &IntMatrix::identity(self.domain.num_generators()))
    }
}

impl PartialEq for GroupHom {
    fn eq(&self, other: &Self) -> bool {
        self.domain.is_isomorphic(&other.domain)
            && self.codomain.is_isomorphic(&other.codomain)
            && self.matrix == other.matrix
    }
}

fn reduce_columns(g: &FgAbGroup, m: &IntMatrix) -> IntMatrix {
    let cols: Vec<Vec<Int>> = m.columns().map(|c| g.reduce(c)).collect();
    IntMatrix::from_columns(m.rows(), &cols)
}

/// The map on classes induced by an ambient map `f: Z^a -> Z^b`.
///
/// Fails with `NotChainMap` unless `f` carries cycles of `dom` to cycles of
/// `cod` and relations of `dom` to relations of `cod`.
pub fn induced_hom(f: &IntMatrix, dom: &FgAbGroup, cod: &FgAbGroup) -> Result<GroupHom, LinalgError> {
    if f.cols() != dom.ambient_dim() || f.rows() != cod.ambient_dim() {
        return Err(LinalgError::Shape(format!(
            "ambient map is {}x{} but groups live in Z^{} and Z^{}",
            f.rows(),
            f.cols(),
            dom.ambient_dim(),
            cod.ambient_dim()
        )));
    }
    let basis = dom.cycles.basis();
    for (j, z) in basis.columns().enumerate() {
        if !cod.is_cycle(&f.mul_vec(&z)?) {
            return Err(LinalgError::NotChainMap(format!("cycle basis vector {j} is not sent to a cycle")));
        }
    }
    for (j, r) in dom.relations.columns().enumerate() {
        let image = cod.class_of(&f.mul_vec(&r)?)?;
        if !cod.is_zero(&image) {
            return Err(LinalgError::NotChainMap(format!("relation {j} is not sent to a relation")));
        }
    }
    let cols = dom.generators.columns().map(|g| cod.class_of(&f.mul_vec(&g)?)).collect::<Result<Vec<_>, _>>()?;
    Ok(GroupHom {
        domain: dom.clone(),
        codomain: cod.clone(),
        matrix: IntMatrix::from_columns(cod.num_generators(), &cols),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::matrix::int_vec;

    fn group_string(g: &FgAbGroup) -> String {
        g.to_string()
    }

    #[test]
    fn unimodular_image_kills_everything() {
        let g = subquotient_group(&IntMatrix::zeros(0, 2), &IntMatrix::from_rows(&[vec![0, -1], vec![-1, 0]])).unwrap();
        assert!(g.is_trivial());
    }

    #[test]
    fn no_relations() {
        let g = subquotient_group(&IntMatrix::zeros(0, 3), &IntMatrix::zeros(3, 0)).unwrap();
        assert_eq!(group_string(&g), "Z^3");
    }

    #[test]
    fn rank_one_image() {
        let g =
            subquotient_group(&IntMatrix::zeros(0, 2), &IntMatrix::from_rows(&[vec![-1, -1], vec![-1, -1]])).unwrap();
        assert_eq!(g.free_rank(), 1);
        assert!(g.torsion().is_empty());
    }

    #[test]
    fn torsion_ordering_and_classes() {
        let g =
            subquotient_group(&IntMatrix::zeros(0, 3), &IntMatrix::from_rows(&[vec![2, 0], vec![0, 3], vec![0, 0]]))
                .unwrap();
        assert_eq!(group_string(&g), "Z ⊕ Z/6");
        let x = g.class_of(&int_vec(&[1, 1, 0])).unwrap();
        assert_eq!(x[0], Int::zero());
        let six_x: Vec<Int> = x.iter().map(|v| v * 6).collect();
        assert!(g.is_zero(&six_x));
        assert!(!g.is_zero(&x));
        assert!(g.is_zero(&g.class_of(&int_vec(&[2, 0, 0])).unwrap()));
    }

    #[test]
    fn incompatible_complex_detected() {
        let err = subquotient_group(&IntMatrix::from_rows(&[vec![1, 0]]), &IntMatrix::from_rows(&[vec![1], vec![0]]))
            .unwrap_err();
        assert!(matches!(err, LinalgError::IncompatibleComplex { column: 0 }));
    }

    #[test]
    fn identity_and_doubling() {
        let g = FgAbGroup::free(2);
        let id = induced_hom(&IntMatrix::identity(2), &g, &g).unwrap();
        assert!(id.is_identity());
        let two = induced_hom(&IntMatrix::scalar(2, 2), &g, &g).unwrap();
        assert_eq!(two.matrix(), &IntMatrix::scalar(2, 2));
    }

    #[test]
    fn kernel_to_cokernel_multiplies_by_two() {
        // A = [[2,1],[1,2]], I - A^T = [[-1,-1],[-1,-1]]
        let m = IntMatrix::from_rows(&[vec![-1, -1], vec![-1, -1]]);
        let h1 = subquotient_group(&m, &IntMatrix::zeros(2, 0)).unwrap();
        let h0 = subquotient_group(&IntMatrix::zeros(0, 2), &m).unwrap();
        let f = induced_hom(&IntMatrix::identity(2), &h1, &h0).unwrap();
        let gen = h1.generators().column(0);
        let image = h0.representative(&f.apply(&[Int::one()]).unwrap()).unwrap();
        // H0 is identified with Z by (x, y) -> x - y
        let read = |v: &[Int]| &v[0] - &v[1];
        assert_eq!(read(&image), &gen[0] * 2);
        assert_eq!(f.matrix()[(0, 0)].magnitude(), Int::from(2).magnitude());
    }

    #[test]
    fn relations_must_map_to_relations() {
        let dom = FgAbGroup::free(1);
        let cod = subquotient_group(&IntMatrix::zeros(0, 1), &IntMatrix::from_rows(&[vec![2]])).unwrap();
        assert!(induced_hom(&IntMatrix::identity(1), &dom, &cod).is_ok());
        assert!(matches!(induced_hom(&IntMatrix::identity(1), &cod, &dom), Err(LinalgError::NotChainMap(_))));
    }

    #[test]
    fn mod_k_subquotient() {
        // Z --2--> Z with Z/2 coefficients: both H0 and H1 are Z/2
        let d = IntMatrix::from_rows(&[vec![2]]);
        let k = Int::from(2);
        let h1 = subquotient_group_mod(&d, &IntMatrix::zeros(1, 0), &k).unwrap();
        let h0 = subquotient_group_mod(&IntMatrix::zeros(0, 1), &d, &k).unwrap();
        assert_eq!(h1.to_string(), "Z/2");
        assert_eq!(h0.to_string(), "Z/2");
    }
}
