//! Two-dimensional Δ-complexes: cellular coboundaries, cohomology and the
//! Alexander–Whitney cup product.
//!
//! A face is an ordered triangle `[v0, v1, v2]` whose three edge slots name
//! the stored edges realizing `[v0, v1]`, `[v1, v2]` and `[v0, v2]`. Each
//! slot carries a sign `s = ±1` (the stored edge runs along the slot when
//! `s = +1`), and the face carries an orientation `±1` relative to the
//! simplex. A complex may instead list polygonal cells by their signed edge
//! incidence only; such complexes have cohomology but no cup product.
//!
//! Cochains are plain integer vectors indexed by vertices, edges or faces
//! in declaration order.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::linalg::{smith_normal_form, subquotient_group, FgAbGroup, HermiteBasis, Int, IntMatrix, LinalgError};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum DeltaError {
    #[error("malformed complex: {0}")]
    Malformed(String),
    #[error("face `{face}`: slot {slot} does not match the endpoints of edge `{edge}`")]
    InconsistentIncidence { face: String, slot: &'static str, edge: String },
    #[error("coboundaries do not compose to zero at face `{0}`")]
    NotACochainComplex(String),
    #[error("face `{0}` is a polygonal cell without simplicial structure")]
    NoSimplicialStructure(String),
    #[error("`{0}` is not a cocycle")]
    NotACocycle(String),
    #[error("invalid basis: {0}")]
    InvalidBasis(String),
    #[error("cochain of degree {degree} has length {found}, expected {expected}")]
    Length { degree: usize, expected: usize, found: usize },
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub id: String,
    pub tail: usize,
    pub head: usize,
}

/// Slot order: `[v0, v1]`, `[v1, v2]`, `[v0, v2]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Triangle {
    pub v: [usize; 3],
    pub e: [usize; 3],
    pub s: [i64; 3],
    pub orientation: i64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Cell {
    Triangle(Triangle),
    /// Signed incidence of edges in the boundary.
    Polygon(Vec<(usize, i64)>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    pub id: String,
    pub cell: Cell,
}

#[derive(Clone, Debug)]
pub struct DeltaComplex {
    vertices: Vec<String>,
    edges: Vec<Edge>,
    faces: Vec<Face>,
    cocycles: Vec<(String, Vec<Int>)>,
    h1_basis: Vec<usize>,
    h2_basis: Vec<usize>,
    delta1: IntMatrix,
    delta2: IntMatrix,
}

const SLOTS: [&str; 3] = ["e01", "e12", "e02"];
const SLOT_ENDS: [(usize, usize); 3] = [(0, 1), (1, 2), (0, 2)];

impl DeltaComplex {
    /// Validates incidences and builds the coboundary matrices.
    pub fn new(vertices: Vec<String>, edges: Vec<Edge>, faces: Vec<Face>) -> Result<Self, DeltaError> {
        unique("vertex", vertices.iter())?;
        unique("edge", edges.iter().map(|e| &e.id))?;
        unique("face", faces.iter().map(|f| &f.id))?;
        let (nv, ne) = (vertices.len(), edges.len());
        for e in &edges {
            if e.tail >= nv || e.head >= nv {
                return Err(DeltaError::Malformed(format!("edge `{}` has an endpoint out of range", e.id)));
            }
        }
        let delta1 = IntMatrix::from_fn(ne, nv, |i, v| {
            let e = &edges[i];
            Int::from(i64::from(e.head == v) - i64::from(e.tail == v))
        });
        let mut delta2 = IntMatrix::zeros(faces.len(), ne);
        for (row, f) in faces.iter().enumerate() {
            match &f.cell {
                Cell::Triangle(t) => {
                    if t.orientation.abs() != 1 || t.s.iter().any(|s| s.abs() != 1) {
                        return Err(DeltaError::Malformed(format!("face `{}` has a sign other than ±1", f.id)));
                    }
                    if t.v.iter().any(|&v| v >= nv) || t.e.iter().any(|&e| e >= ne) {
                        return Err(DeltaError::Malformed(format!("face `{}` refers to an unknown cell", f.id)));
                    }
                    for k in 0..3 {
                        let (a, b) = (t.v[SLOT_ENDS[k].0], t.v[SLOT_ENDS[k].1]);
                        let edge = &edges[t.e[k]];
                        let ends = if t.s[k] == 1 { (a, b) } else { (b, a) };
                        if (edge.tail, edge.head) != ends {
                            return Err(DeltaError::InconsistentIncidence {
                                face: f.id.clone(),
                                slot: SLOTS[k],
                                edge: edge.id.clone(),
                            });
                        }
                        let sign = if k == 2 { -1 } else { 1 };
                        delta2[(row, t.e[k])] += Int::from(sign * t.orientation * t.s[k]);
                    }
                }
                Cell::Polygon(boundary) => {
                    for &(e, c) in boundary {
                        if e >= ne {
                            return Err(DeltaError::Malformed(format!("face `{}` refers to an unknown edge", f.id)));
                        }
                        delta2[(row, e)] += Int::from(c);
                    }
                }
            }
        }
        let composite = delta2.mul(&delta1)?;
        if let Some(row) = (0..faces.len()).find(|&r| composite.row(r).iter().any(|x| !x.is_zero())) {
            return Err(DeltaError::NotACochainComplex(faces[row].id.clone()));
        }
        Ok(DeltaComplex {
            vertices,
            edges,
            faces,
            cocycles: Vec::new(),
            h1_basis: Vec::new(),
            h2_basis: Vec::new(),
            delta1,
            delta2,
        })
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn vertex(&self, name: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == name)
    }

    pub fn edge(&self, name: &str) -> Option<usize> {
        self.edges.iter().position(|e| e.id == name)
    }

    pub fn face(&self, name: &str) -> Option<usize> {
        self.faces.iter().position(|f| f.id == name)
    }

    /// Number of cells in each dimension; zero above two.
    pub fn cells(&self, degree: usize) -> usize {
        match degree {
            0 => self.vertices.len(),
            1 => self.edges.len(),
            2 => self.faces.len(),
            _ => 0,
        }
    }

    /// True when every face is a triangle, so cup products are defined.
    pub fn is_simplicial(&self) -> bool {
        self.faces.iter().all(|f| matches!(f.cell, Cell::Triangle(_)))
    }

    /// `(δ′_1, δ′_2)` with rows indexed by edges and faces respectively.
    pub fn coboundaries(&self) -> (&IntMatrix, &IntMatrix) {
        (&self.delta1, &self.delta2)
    }

    /// Cocycles declared in the input file.
    pub fn declared_cocycles(&self) -> &[(String, Vec<Int>)] {
        &self.cocycles
    }

    /// Indices into the declared cocycles forming an `H^1` basis.
    pub fn declared_h1_basis(&self) -> &[usize] {
        &self.h1_basis
    }

    /// Faces declared as an `H^2` basis in the input file.
    pub fn declared_h2_basis(&self) -> &[usize] {
        &self.h2_basis
    }

    fn check(&self, degree: usize, c: &[Int]) -> Result<(), DeltaError> {
        let expected = self.cells(degree);
        if c.len() != expected {
            return Err(DeltaError::Length { degree, expected, found: c.len() });
        }
        Ok(())
    }

    pub fn coboundary(&self, degree: usize, c: &[Int]) -> Result<Vec<Int>, DeltaError> {
        self.check(degree, c)?;
        Ok(match degree {
            0 => self.delta1.mul_vec(c)?,
            1 => self.delta2.mul_vec(c)?,
            _ => Vec::new(),
        })
    }

    pub fn is_cocycle(&self, degree: usize, c: &[Int]) -> Result<bool, DeltaError> {
        Ok(self.coboundary(degree, c)?.iter().all(Zero::is_zero))
    }

    /// `H^1 = Ker δ′_2 / Im δ′_1` and `H^2 = Z^F / Im δ′_2`.
    pub fn cohomology(&self) -> Result<DeltaCohomology, DeltaError> {
        let h1 = subquotient_group(&self.delta2, &self.delta1)?;
        let h2 = subquotient_group(&IntMatrix::zeros(0, self.faces.len()), &self.delta2)?;
        Ok(DeltaCohomology { h1, h2 })
    }

    /// Canonical basis of `Im δ′_2`, for lattice comparisons.
    pub fn image_of_delta2(&self) -> HermiteBasis {
        HermiteBasis::of_columns(&self.delta2)
    }

    fn triangle(&self, f: usize) -> Result<&Triangle, DeltaError> {
        match &self.faces[f].cell {
            Cell::Triangle(t) => Ok(t),
            Cell::Polygon(_) => Err(DeltaError::NoSimplicialStructure(self.faces[f].id.clone())),
        }
    }

    /// Alexander–Whitney product of a `p`-cochain and a `q`-cochain.
    ///
    /// On an edge, `(f ⌣ η)(e) = f(tail) η(e)` and `(ξ ⌣ f)(e) = ξ(e) f(head)`.
    /// On a face, the value is taken on the ordered simplex and multiplied by
    /// the face orientation; slot signs convert stored edges to simplex edges.
    pub fn cup(&self, p: usize, a: &[Int], q: usize, b: &[Int]) -> Result<Vec<Int>, DeltaError> {
        self.check(p, a)?;
        self.check(q, b)?;
        let faces = 0..self.faces.len();
        Ok(match (p, q) {
            (0, 0) => a.iter().zip(b).map(|(x, y)| x * y).collect(),
            (0, 1) => self.edges.iter().zip(b).map(|(e, y)| &a[e.tail] * y).collect(),
            (1, 0) => self.edges.iter().zip(a).map(|(e, x)| x * &b[e.head]).collect(),
            (0, 2) => faces.map(|f| Ok(&a[self.triangle(f)?.v[0]] * &b[f])).collect::<Result<_, DeltaError>>()?,
            (2, 0) => faces.map(|f| Ok(&a[f] * &b[self.triangle(f)?.v[2]])).collect::<Result<_, DeltaError>>()?,
            (1, 1) => faces
                .map(|f| {
                    let t = self.triangle(f)?;
                    let sign = Int::from(t.orientation * t.s[0] * t.s[1]);
                    Ok(sign * &a[t.e[0]] * &b[t.e[1]])
                })
                .collect::<Result<_, DeltaError>>()?,
            _ => Vec::new(),
        })
    }

    /// `ξ ⌣ η` for 1-cochains.
    pub fn aw_cup(&self, xi: &[Int], eta: &[Int]) -> Result<Vec<Int>, DeltaError> {
        self.cup(1, xi, 1, eta)
    }

    /// The basis declared in the input file.
    pub fn declared_basis(&self) -> Result<CohomologyBasis, DeltaError> {
        let h1 = self.h1_basis.iter().map(|&i| self.cocycles[i].clone()).collect();
        CohomologyBasis::new(self, h1, self.h2_basis.clone())
    }

    /// Cup products of all ordered pairs of `H^1` basis elements, written in
    /// the `H^2` basis.
    pub fn cup_table(&self, basis: &CohomologyBasis) -> Result<CupTable, DeltaError> {
        self.cup_table_of(basis, &basis.h1)
    }

    /// Cup products of all ordered pairs from an arbitrary list of cocycles,
    /// written in the `H^2` basis of `basis`.
    pub fn cup_table_of(
        &self,
        basis: &CohomologyBasis,
        cocycles: &[(String, Vec<Int>)],
    ) -> Result<CupTable, DeltaError> {
        for (name, c) in cocycles {
            if !self.is_cocycle(1, c)? {
                return Err(DeltaError::NotACocycle(name.clone()));
            }
        }
        let mut entries = Vec::with_capacity(cocycles.len());
        for (_, x) in cocycles {
            let row =
                cocycles.iter().map(|(_, y)| basis.h2_coords(&self.aw_cup(x, y)?)).collect::<Result<Vec<_>, _>>()?;
            entries.push(row);
        }
        Ok(CupTable {
            rows: cocycles.iter().map(|(n, _)| n.clone()).collect(),
            columns: basis.h2.iter().map(|&f| self.faces[f].id.clone()).collect(),
            entries,
        })
    }

    /// An edge cochain from named coefficients.
    pub fn edge_cochain<S: AsRef<str>>(&self, terms: &[(S, i64)]) -> Result<Vec<Int>, DeltaError> {
        let mut c = vec![Int::zero(); self.edges.len()];
        for (name, k) in terms {
            let i = self.edge(name.as_ref()).ok_or_else(|| unknown("edge", name.as_ref()))?;
            c[i] += *k;
        }
        Ok(c)
    }

    /// A face cochain from named coefficients.
    pub fn face_cochain<S: AsRef<str>>(&self, terms: &[(S, i64)]) -> Result<Vec<Int>, DeltaError> {
        let mut c = vec![Int::zero(); self.faces.len()];
        for (name, k) in terms {
            let i = self.face(name.as_ref()).ok_or_else(|| unknown("face", name.as_ref()))?;
            c[i] += *k;
        }
        Ok(c)
    }

    /// Parses the JSON complex format.
    pub fn from_json(text: &str) -> Result<Self, DeltaError> {
        let file: ComplexFile = serde_json::from_str(text)
            .map_err(|e| DeltaError::Malformed(format!("line {} column {}: {e}", e.line(), e.column())))?;
        file.load()
    }

    pub fn to_file(&self) -> ComplexFile {
        let vname = |v: usize| self.vertices[v].clone();
        let ename = |e: usize| self.edges[e].id.clone();
        let mut faces = Vec::new();
        let mut cells = Vec::new();
        for f in &self.faces {
            match &f.cell {
                Cell::Triangle(t) => faces.push(FaceRecord {
                    id: f.id.clone(),
                    v: t.v.map(vname),
                    e01: ename(t.e[0]),
                    e12: ename(t.e[1]),
                    e02: ename(t.e[2]),
                    s01: t.s[0],
                    s12: t.s[1],
                    s02: t.s[2],
                    orientation: t.orientation,
                }),
                Cell::Polygon(b) => cells
                    .push(CellRecord { id: f.id.clone(), boundary: b.iter().map(|&(e, c)| (ename(e), c)).collect() }),
            }
        }
        let cocycles = self
            .cocycles
            .iter()
            .map(|(id, c)| CocycleRecord {
                id: id.clone(),
                values: c
                    .iter()
                    .enumerate()
                    .filter(|(_, x)| !x.is_zero())
                    .map(|(e, x)| (ename(e), i64::try_from(x).expect("declared cocycles fit in i64")))
                    .collect(),
            })
            .collect();
        ComplexFile {
            vertices: self.vertices.clone(),
            edges: self
                .edges
                .iter()
                .map(|e| EdgeRecord { id: e.id.clone(), tail: vname(e.tail), head: vname(e.head) })
                .collect(),
            faces,
            cells,
            cocycles,
            h1_basis: self.h1_basis.iter().map(|&i| self.cocycles[i].0.clone()).collect(),
            h2_basis: self.h2_basis.iter().map(|&f| self.faces[f].id.clone()).collect(),
        }
    }
}

fn unique<'a>(what: &str, names: impl Iterator<Item = &'a String>) -> Result<(), DeltaError> {
    let mut seen = std::collections::HashSet::new();
    for n in names {
        if !seen.insert(n) {
            return Err(DeltaError::Malformed(format!("duplicate {what} `{n}`")));
        }
    }
    Ok(())
}

fn unknown(what: &str, name: &str) -> DeltaError {
    DeltaError::Malformed(format!("unknown {what} `{name}`"))
}

#[derive(Clone, Debug)]
pub struct DeltaCohomology {
    pub h1: FgAbGroup,
    pub h2: FgAbGroup,
}

/// Named `H^1` representatives and `H^2` basis faces, validated to be bases.
#[derive(Clone, Debug)]
pub struct CohomologyBasis {
    h1: Vec<(String, Vec<Int>)>,
    h2: Vec<usize>,
    h2_group: FgAbGroup,
    /// Group coordinates to declared coordinates.
    h2_change: IntMatrix,
}

impl CohomologyBasis {
    /// Both groups must be free and the declared classes must form bases.
    pub fn new(k: &DeltaComplex, h1: Vec<(String, Vec<Int>)>, h2: Vec<usize>) -> Result<Self, DeltaError> {
        let groups = k.cohomology()?;
        for (name, c) in &h1 {
            if !k.is_cocycle(1, c)? {
                return Err(DeltaError::NotACocycle(name.clone()));
            }
        }
        let h1_classes: Vec<Vec<Int>> = h1.iter().map(|(_, c)| groups.h1.class_of(c)).collect::<Result<_, _>>()?;
        inverse_of_basis("H^1", &groups.h1, &h1_classes)?;
        let h2_classes: Vec<Vec<Int>> = h2
            .iter()
            .map(|&f| {
                let mut e = vec![Int::zero(); k.faces.len()];
                e[f] = Int::one();
                groups.h2.class_of(&e)
            })
            .collect::<Result<_, _>>()?;
        let h2_change = inverse_of_basis("H^2", &groups.h2, &h2_classes)?;
        Ok(CohomologyBasis { h1, h2, h2_group: groups.h2, h2_change })
    }

    pub fn h1(&self) -> &[(String, Vec<Int>)] {
        &self.h1
    }

    pub fn h2(&self) -> &[usize] {
        &self.h2
    }

    /// Coordinates of the class of a 2-cochain in the declared `H^2` basis.
    pub fn h2_coords(&self, c: &[Int]) -> Result<Vec<Int>, DeltaError> {
        let g = self.h2_group.class_of(c)?;
        Ok(self.h2_change.mul_vec(&g)?)
    }
}

fn inverse_of_basis(what: &str, group: &FgAbGroup, classes: &[Vec<Int>]) -> Result<IntMatrix, DeltaError> {
    if !group.torsion().is_empty() {
        return Err(DeltaError::InvalidBasis(format!("{what} = {group} has torsion")));
    }
    let r = group.num_generators();
    if classes.len() != r {
        return Err(DeltaError::InvalidBasis(format!("{} classes declared for {what} of rank {r}", classes.len())));
    }
    let b = IntMatrix::from_columns(r, classes);
    let snf = smith_normal_form(&b);
    if snf.rank() != r || snf.diagonal().iter().any(|d| !d.is_one()) {
        return Err(DeltaError::InvalidBasis(format!("declared classes do not form a basis of {what}")));
    }
    // u b v = I, so b^{-1} = v u
    Ok(snf.v.mul(&snf.u)?)
}

/// `entries[i][j]` is `[ξ_i] ⌣ [ξ_j]` in the declared `H^2` basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CupTable {
    pub rows: Vec<String>,
    pub columns: Vec<String>,
    pub entries: Vec<Vec<Vec<Int>>>,
}

impl CupTable {
    pub fn get(&self, i: usize, j: usize) -> &[Int] {
        &self.entries[i][j]
    }
}

impl fmt::Display for CupTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, a) in self.rows.iter().enumerate() {
            for (j, b) in self.rows.iter().enumerate() {
                write!(f, "[{a}] ⌣ [{b}] = ")?;
                let mut first = true;
                for (c, name) in self.entries[i][j].iter().zip(&self.columns) {
                    if c.is_zero() {
                        continue;
                    }
                    let (sign, mag) = if c < &Int::zero() { ("-", -c) } else { ("+", c.clone()) };
                    match (first, sign) {
                        (true, "+") => {}
                        (true, _) => write!(f, "-")?,
                        (false, s) => write!(f, " {s} ")?,
                    }
                    if mag.is_one() {
                        write!(f, "[{name}]")?;
                    } else {
                        write!(f, "{mag}[{name}]")?;
                    }
                    first = false;
                }
                if first {
                    write!(f, "0")?;
                }
                writeln!(f)?;
            }
        }
        Ok(())
    }
}

/// Serialized complex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexFile {
    pub vertices: Vec<String>,
    pub edges: Vec<EdgeRecord>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub faces: Vec<FaceRecord>,
    /// Polygonal cells given only by signed edge incidence.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub cells: Vec<CellRecord>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub cocycles: Vec<CocycleRecord>,
    /// Names of declared cocycles forming an `H^1` basis.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub h1_basis: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub h2_basis: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EdgeRecord {
    pub id: String,
    pub tail: String,
    pub head: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FaceRecord {
    pub id: String,
    pub v: [String; 3],
    pub e01: String,
    pub e12: String,
    pub e02: String,
    pub s01: i64,
    pub s12: i64,
    pub s02: i64,
    #[serde(default = "positive", skip_serializing_if = "is_positive")]
    pub orientation: i64,
}

fn positive() -> i64 {
    1
}

fn is_positive(x: &i64) -> bool {
    *x == 1
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CellRecord {
    pub id: String,
    pub boundary: BTreeMap<String, i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CocycleRecord {
    pub id: String,
    pub values: BTreeMap<String, i64>,
}

impl ComplexFile {
    pub fn load(&self) -> Result<DeltaComplex, DeltaError> {
        let vidx: HashMap<&str, usize> = self.vertices.iter().enumerate().map(|(i, v)| (v.as_str(), i)).collect();
        let eidx: HashMap<&str, usize> = self.edges.iter().enumerate().map(|(i, e)| (e.id.as_str(), i)).collect();
        let v = |name: &str| vidx.get(name).copied().ok_or_else(|| unknown("vertex", name));
        let e = |name: &str| eidx.get(name).copied().ok_or_else(|| unknown("edge", name));
        let edges = self
            .edges
            .iter()
            .map(|r| Ok(Edge { id: r.id.clone(), tail: v(&r.tail)?, head: v(&r.head)? }))
            .collect::<Result<Vec<_>, DeltaError>>()?;
        let mut faces = Vec::with_capacity(self.faces.len() + self.cells.len());
        for r in &self.faces {
            let t = Triangle {
                v: [v(&r.v[0])?, v(&r.v[1])?, v(&r.v[2])?],
                e: [e(&r.e01)?, e(&r.e12)?, e(&r.e02)?],
                s: [r.s01, r.s12, r.s02],
                orientation: r.orientation,
            };
            faces.push(Face { id: r.id.clone(), cell: Cell::Triangle(t) });
        }
        for r in &self.cells {
            let boundary = r.boundary.iter().map(|(name, &c)| Ok((e(name)?, c))).collect::<Result<_, DeltaError>>()?;
            faces.push(Face { id: r.id.clone(), cell: Cell::Polygon(boundary) });
        }
        let mut k = DeltaComplex::new(self.vertices.clone(), edges, faces)?;
        k.cocycles = self
            .cocycles
            .iter()
            .map(|c| {
                let terms: Vec<(&str, i64)> = c.values.iter().map(|(n, &x)| (n.as_str(), x)).collect();
                Ok((c.id.clone(), k.edge_cochain(&terms)?))
            })
            .collect::<Result<_, DeltaError>>()?;
        k.h1_basis = self
            .h1_basis
            .iter()
            .map(|n| k.cocycles.iter().position(|(id, _)| id == n).ok_or_else(|| unknown("cocycle", n)))
            .collect::<Result<_, _>>()?;
        k.h2_basis =
            self.h2_basis.iter().map(|n| k.face(n).ok_or_else(|| unknown("face", n))).collect::<Result<_, _>>()?;
        Ok(k)
    }
}

/// Penrose approximant complex: 4 vertices, 40 edges, 40 faces, with the
/// cocycles `xi0..xi4`, `eta`, the `H^1` basis `xi0..xi3, eta` and the
/// `H^2` basis `A0..A4, B0, E0, F0`.
pub fn penrose() -> DeltaComplex {
    DeltaComplex::from_json(include_str!("../data/penrose.delta")).expect("shipped dataset is valid")
}

/// Ammann approximant complex: 3 vertices, 8 edges and 8 polygonal cells,
/// with the `H^1` basis `xi1..xi4` and the `H^2` basis `A, B, D, E, F, H`.
pub fn ammann() -> DeltaComplex {
    DeltaComplex::from_json(include_str!("../data/ammann.delta")).expect("shipped dataset is valid")
}

/// The two-triangle torus: one vertex, edges `a`, `b`, `c` and faces
/// `U = [a, b; c]`, `L = [b, a; c]`.
pub fn torus() -> DeltaComplex {
    let tri = |a, b| Cell::Triangle(Triangle { v: [0; 3], e: [a, b, 2], s: [1; 3], orientation: 1 });
    let edges = ["a", "b", "c"].map(|id| Edge { id: id.into(), tail: 0, head: 0 }).to_vec();
    let faces = vec![Face { id: "U".into(), cell: tri(0, 1) }, Face { id: "L".into(), cell: tri(1, 0) }];
    DeltaComplex::new(vec!["v".into()], edges, faces).expect("torus is valid")
}
