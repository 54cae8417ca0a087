//! Weighted dual graphs of curve configurations: negative definiteness,
//! discrepancy solving, and classification of the contracted singularity.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::hj::{chain_determinant, HJChain};
use crate::rat::{denominator_lcm, Rat};
use crate::{Error, Result};

/// Singular-point marker on a single component: a component may carry one
/// node or one cusp, raising its arithmetic genus by one.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SingMarker {
    Smooth,
    Node,
    Cusp,
}

/// A curve in the configuration. `b` is the negated self-intersection, so
/// the curve has self-intersection -b; `genus` is the geometric genus.
#[derive(Debug, Clone)]
pub struct Vertex {
    pub id: String,
    pub b: u64,
    pub genus: u64,
    pub marker: SingMarker,
}

impl Vertex {
    fn pa(&self) -> u64 {
        self.genus + if self.marker == SingMarker::Smooth { 0 } else { 1 }
    }
}

/// Dual graph with edge multiplicities (intersection numbers between
/// distinct components) and boundary attachments: non-contracted curves
/// meeting a component, each with a coefficient <= 1 and a local
/// intersection multiplicity.
#[derive(Debug, Clone, Default)]
pub struct DualGraph {
    vertices: Vec<Vertex>,
    edges: Vec<(usize, usize, u64)>,
    attachments: Vec<(usize, Rat, u64)>,
    ids: HashMap<String, usize>,
}

const MAX_B: u64 = 1 << 40;
const MAX_MULT: u64 = 1 << 20;

impl DualGraph {
    pub fn new() -> DualGraph {
        DualGraph::default()
    }

    pub fn add_vertex(&mut self, id: &str, b: u64, genus: u64, marker: SingMarker) -> Result<()> {
        if self.ids.contains_key(id) {
            return Err(Error::BadEntry(format!("duplicate vertex id '{}'", id)));
        }
        if b == 0 {
            return Err(Error::BadEntry(format!("vertex '{}': b must be >= 1", id)));
        }
        if b > MAX_B {
            return Err(Error::OutOfRange(format!("vertex '{}': b too large", id)));
        }
        self.ids.insert(id.to_string(), self.vertices.len());
        self.vertices.push(Vertex { id: id.to_string(), b, genus, marker });
        Ok(())
    }

    /// Adds `mult` transversal intersection points between two distinct
    /// components; parallel calls accumulate.
    pub fn add_edge(&mut self, a: &str, b: &str, mult: u64) -> Result<()> {
        let i = self.lookup(a)?;
        let j = self.lookup(b)?;
        if i == j {
            return Err(Error::BadEntry(format!(
                "self-edge on '{}': encode a node with sing=node instead",
                a
            )));
        }
        if mult == 0 || mult > MAX_MULT {
            return Err(Error::BadEntry("edge multiplicity must be in 1..=2^20".into()));
        }
        let (i, j) = if i < j { (i, j) } else { (j, i) };
        for e in &mut self.edges {
            if e.0 == i && e.1 == j {
                e.2 += mult;
                return Ok(());
            }
        }
        self.edges.push((i, j, mult));
        Ok(())
    }

    /// Attaches a non-contracted boundary curve of coefficient `coeff` to a
    /// component, meeting it with local multiplicity `mult`.
    pub fn attach_boundary(&mut self, v: &str, coeff: Rat, mult: u64) -> Result<()> {
        let i = self.lookup(v)?;
        if coeff > Rat::one() {
            return Err(Error::OutOfRange(format!("boundary coefficient {} > 1", coeff)));
        }
        if mult == 0 || mult > MAX_MULT {
            return Err(Error::BadEntry("attachment multiplicity must be in 1..=2^20".into()));
        }
        self.attachments.push((i, coeff, mult));
        Ok(())
    }

    fn lookup(&self, id: &str) -> Result<usize> {
        self.ids
            .get(id)
            .copied()
            .ok_or_else(|| Error::UnknownComponent(format!("unknown vertex id '{}'", id)))
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn attachments(&self) -> impl Iterator<Item = (&str, &Rat, u64)> {
        self.attachments
            .iter()
            .map(|(i, d, m)| (self.vertices[*i].id.as_str(), d, *m))
    }

    /// Parses the graph text format: one directive per line, `#` comments.
    ///
    /// ```text
    /// v <id> b=<int> [g=<int>] [sing=node|cusp]
    /// e <id1> <id2> [m=<int>]
    /// c <id> d=<p/q> [m=<int>]
    /// ```
    pub fn parse(text: &str) -> Result<DualGraph> {
        let mut g = DualGraph::new();
        for (ln, raw) in text.lines().enumerate() {
            let line = ln + 1;
            let stripped = match raw.find('#') {
                Some(p) => &raw[..p],
                None => raw,
            };
            let toks: Vec<&str> = stripped.split_whitespace().collect();
            if toks.is_empty() {
                continue;
            }
            let at = |e: Error| Error::Parse { line, msg: e.to_string() };
            match toks[0] {
                "v" => {
                    if toks.len() < 2 {
                        return Err(parse_err(line, "v needs an id"));
                    }
                    let id = toks[1];
                    let mut b: Option<u64> = None;
                    let mut genus = 0u64;
                    let mut marker = SingMarker::Smooth;
                    for tok in &toks[2..] {
                        match attr(tok, line)? {
                            ("b", v) => b = Some(parse_u64(v, line)?),
                            ("g", v) => genus = parse_u64(v, line)?,
                            ("sing", "node") => marker = SingMarker::Node,
                            ("sing", "cusp") => marker = SingMarker::Cusp,
                            ("sing", other) => {
                                return Err(parse_err(line, &format!("unknown marker '{}'", other)))
                            }
                            (k, _) => {
                                return Err(parse_err(line, &format!("unknown attribute '{}'", k)))
                            }
                        }
                    }
                    let b = b.ok_or_else(|| parse_err(line, "v needs b=<int>"))?;
                    g.add_vertex(id, b, genus, marker).map_err(at)?;
                }
                "e" => {
                    if toks.len() < 3 {
                        return Err(parse_err(line, "e needs two vertex ids"));
                    }
                    let mut mult = 1u64;
                    for tok in &toks[3..] {
                        match attr(tok, line)? {
                            ("m", v) => mult = parse_u64(v, line)?,
                            (k, _) => {
                                return Err(parse_err(line, &format!("unknown attribute '{}'", k)))
                            }
                        }
                    }
                    g.add_edge(toks[1], toks[2], mult).map_err(at)?;
                }
                "c" => {
                    if toks.len() < 2 {
                        return Err(parse_err(line, "c needs a vertex id"));
                    }
                    let mut coeff: Option<Rat> = None;
                    let mut mult = 1u64;
                    for tok in &toks[2..] {
                        match attr(tok, line)? {
                            ("d", v) => {
                                coeff = Some(Rat::parse(v).map_err(|_| {
                                    parse_err(line, &format!("bad rational '{}'", v))
                                })?)
                            }
                            ("m", v) => mult = parse_u64(v, line)?,
                            (k, _) => {
                                return Err(parse_err(line, &format!("unknown attribute '{}'", k)))
                            }
                        }
                    }
                    let coeff = coeff.ok_or_else(|| parse_err(line, "c needs d=<p/q>"))?;
                    g.attach_boundary(toks[1], coeff, mult).map_err(at)?;
                }
                other => {
                    return Err(parse_err(line, &format!("unknown directive '{}'", other)));
                }
            }
        }
        Ok(g)
    }

    /// The intersection matrix: -b on the diagonal, intersection counts off
    /// the diagonal.
    pub fn intersection_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.vertices.len();
        let mut m = vec![vec![0i64; n]; n];
        for (i, v) in self.vertices.iter().enumerate() {
            m[i][i] = -(v.b as i64);
        }
        for &(i, j, mult) in &self.edges {
            m[i][j] += mult as i64;
            m[j][i] += mult as i64;
        }
        m
    }

    /// True iff the intersection matrix is negative definite, so the
    /// configuration contracts to a normal surface point. Decided exactly
    /// through the signs of the leading principal minors.
    pub fn is_contractible(&self) -> bool {
        let m = self.intersection_matrix();
        let n = m.len();
        let mut a: Vec<Vec<BigInt>> = m
            .iter()
            .map(|row| row.iter().map(|&x| BigInt::from(x)).collect())
            .collect();
        // fraction-free elimination; the pivot entering step k is the
        // leading principal minor of order k + 1
        let mut prev = BigInt::one();
        for k in 0..n {
            let pivot = a[k][k].clone();
            let want_negative = k % 2 == 0;
            if pivot.is_zero() || pivot.is_negative() != want_negative {
                return false;
            }
            for i in (k + 1)..n {
                for j in (k + 1)..n {
                    let num = &a[i][j] * &pivot - &a[i][k] * &a[k][j];
                    a[i][j] = num / &prev;
                }
            }
            prev = pivot;
        }
        true
    }

    fn connected(&self) -> bool {
        let n = self.vertices.len();
        if n <= 1 {
            return true;
        }
        let adj = self.adjacency();
        let mut seen = vec![false; n];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &(w, _) in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    fn adjacency(&self) -> Vec<Vec<(usize, u64)>> {
        let mut adj = vec![Vec::new(); self.vertices.len()];
        for &(i, j, m) in &self.edges {
            adj[i].push((j, m));
            adj[j].push((i, m));
        }
        adj
    }

    /// Solves for the coefficients a_i with K + sum(a_i E_i) + boundary
    /// numerically trivial against every E_i. Uses the geometric genus of
    /// each component, so all markers must be smooth; the matrix must be
    /// negative definite.
    pub fn discrepancies(&self) -> Result<PullbackData> {
        for v in &self.vertices {
            if v.marker != SingMarker::Smooth {
                return Err(Error::SingularComponent(format!(
                    "component '{}' carries a singular marker",
                    v.id
                )));
            }
        }
        if !self.is_contractible() {
            return Err(Error::NotContractible);
        }
        let values = self.solve()?;
        Ok(PullbackData {
            ids: self.vertices.iter().map(|v| v.id.clone()).collect(),
            values,
        })
    }

    // discrepancy system with markers folded into arithmetic genus
    fn solve(&self) -> Result<Vec<Rat>> {
        let n = self.vertices.len();
        let im = self.intersection_matrix();
        let mut m: Vec<Vec<Rat>> = im
            .iter()
            .map(|row| row.iter().map(|&x| Rat::int(x)).collect())
            .collect();
        let mut rhs: Vec<Rat> = self
            .vertices
            .iter()
            .map(|v| Rat::int(2 * v.pa() as i64 - 2 + v.b as i64))
            .collect();
        for &(i, ref d, mult) in &self.attachments {
            rhs[i] = &rhs[i] + &(d * &Rat::from(mult));
        }
        // Gauss-Jordan with exact pivoting
        for col in 0..n {
            let piv = (col..n)
                .find(|&r| !m[r][col].is_zero())
                .ok_or(Error::NotContractible)?;
            m.swap(col, piv);
            rhs.swap(col, piv);
            let p = m[col][col].clone();
            for r in 0..n {
                if r != col && !m[r][col].is_zero() {
                    let f = &m[r][col] / &p;
                    for c in col..n {
                        m[r][c] = &m[r][c] - &(&f * &m[col][c]);
                    }
                    rhs[r] = &rhs[r] - &(&f * &rhs[col]);
                }
            }
        }
        Ok((0..n).map(|i| &rhs[i] / &m[i][i]).collect())
    }

    /// Full classification of the contracted point: discrepancy grade,
    /// epsilon-grade, recognized type, and index.
    pub fn classify(&self, eps: Option<&Rat>) -> Result<SingClass> {
        if let Some(e) = eps {
            if !e.is_positive() {
                return Err(Error::OutOfRange(format!("eps {} must be positive", e)));
            }
        }
        if self.is_empty() {
            return Ok(SingClass {
                grade: Grade::Terminal,
                eps_grade: None,
                type_tag: None,
                index: Some(1),
                notes: vec!["empty graph: smooth point".into()],
            });
        }
        if !self.connected() {
            return Err(Error::NotConnected);
        }
        if !self.is_contractible() {
            // numerically trivial fiber-type shapes still get a typed verdict
            if let Some((tag, index)) = self.affine_tag() {
                let amin = Rat::int(-1);
                let mut notes =
                    vec!["numerically trivial fiber-type configuration; not contractible".into()];
                if let Some(e) = eps {
                    push_eps_notes(&mut notes, &amin, e);
                }
                return Ok(SingClass {
                    grade: Grade::Lc,
                    eps_grade: Some(Rat::zero()),
                    type_tag: Some(tag),
                    index: Some(index),
                    notes,
                });
            }
            return Err(Error::NotContractible);
        }

        let values = self.solve()?;
        let amin_exc = values.iter().min().expect("nonempty").clone();
        let mut amin_all = amin_exc.clone();
        for (_, d, _) in &self.attachments {
            let neg = -d;
            if neg < amin_all {
                amin_all = neg;
            }
        }
        let grade = grade_of(&amin_exc, &amin_all);
        let mut notes = Vec::new();

        let minimal = self.vertices.iter().all(|v| v.b >= 2);
        let type_tag = if minimal {
            let (tag, note) = self.type_tag();
            if let Some(n) = note {
                notes.push(n.to_string());
            }
            tag
        } else {
            notes.push(
                "some component has self-intersection -1: contract to a minimal configuration before typing"
                    .into(),
            );
            None
        };

        let lcm = denominator_lcm(values.iter());
        let index = lcm.to_u64();
        if self.attachments.iter().any(|(_, d, _)| *d == Rat::one())
            && self.vertices.iter().all(|v| v.marker == SingMarker::Smooth)
        {
            notes.push("analytically dlt candidate: reduced boundary meets smooth components".into());
        }
        if let Some(e) = eps {
            push_eps_notes(&mut notes, &amin_all, e);
        }
        Ok(SingClass {
            grade,
            eps_grade: Some(Rat::one() + &amin_all),
            type_tag,
            index,
            notes,
        })
    }

    // shape of the underlying multigraph, assuming connectivity
    fn shape(&self) -> Shape {
        let n = self.vertices.len();
        if n == 1 {
            return Shape::Single;
        }
        if self.edges.iter().any(|&(_, _, m)| m >= 3) {
            return Shape::Other;
        }
        let doubles = self.edges.iter().filter(|&&(_, _, m)| m == 2).count();
        if doubles > 0 {
            if n == 2 && self.edges.len() == 1 {
                return Shape::Cycle;
            }
            return Shape::Other;
        }
        let adj = self.adjacency();
        let deg: Vec<usize> = adj.iter().map(|a| a.len()).collect();
        let e = self.edges.len();
        if e == n && deg.iter().all(|&d| d == 2) {
            return Shape::Cycle;
        }
        if e + 1 != n {
            return Shape::Other;
        }
        let maxd = *deg.iter().max().expect("nonempty");
        if maxd <= 2 {
            return Shape::Chain;
        }
        if maxd > 4 {
            return Shape::Other;
        }
        let forks: Vec<usize> = (0..n).filter(|&v| deg[v] == 3).collect();
        let crosses: Vec<usize> = (0..n).filter(|&v| deg[v] == 4).collect();
        match (crosses.len(), forks.len()) {
            (1, 0) => {
                let arms = self.arms(crosses[0], &adj);
                Shape::Star4 { arm_dets: arms.iter().map(|a| self.arm_det(a)).collect() }
            }
            (0, 1) => {
                let center = forks[0];
                let arms = self.arms(center, &adj);
                Shape::Fork {
                    center,
                    arm_dets: arms.iter().map(|a| self.arm_det(a)).collect(),
                }
            }
            (0, 2) => {
                let mut leaf_dets = Vec::new();
                for (this, other) in [(forks[0], forks[1]), (forks[1], forks[0])] {
                    for arm in self.arms(this, &adj) {
                        if !arm.contains(&other) {
                            leaf_dets.push(self.arm_det(&arm));
                        }
                    }
                }
                if leaf_dets.len() == 4 {
                    Shape::TwoForks { leaf_dets }
                } else {
                    Shape::Other
                }
            }
            _ => Shape::Other,
        }
    }

    // the branches hanging off `center` in a tree, center excluded
    fn arms(&self, center: usize, adj: &[Vec<(usize, u64)>]) -> Vec<Vec<usize>> {
        let mut arms = Vec::new();
        for &(start, _) in &adj[center] {
            let mut arm = vec![start];
            let mut prev = center;
            let mut cur = start;
            loop {
                let next: Vec<usize> = adj[cur]
                    .iter()
                    .map(|&(w, _)| w)
                    .filter(|&w| w != prev)
                    .collect();
                match next.len() {
                    0 => break,
                    _ => {
                        // branches inside an arm only occur for the two-fork
                        // shape, where the arm containing the other fork is
                        // discarded by the caller; follow all vertices
                        if next.len() > 1 {
                            arm.extend(self.subtree(cur, prev, adj));
                            break;
                        }
                        prev = cur;
                        cur = next[0];
                        arm.push(cur);
                    }
                }
            }
            arms.push(arm);
        }
        arms
    }

    fn subtree(&self, root: usize, parent: usize, adj: &[Vec<(usize, u64)>]) -> Vec<usize> {
        let mut out = Vec::new();
        let mut stack = vec![(root, parent)];
        while let Some((v, p)) = stack.pop() {
            for &(w, _) in &adj[v] {
                if w != p {
                    out.push(w);
                    stack.push((w, v));
                }
            }
        }
        out
    }

    fn arm_det(&self, arm: &[usize]) -> BigInt {
        let bs: Vec<u64> = arm.iter().map(|&v| self.vertices[v].b).collect();
        chain_determinant(&bs)
    }

    // tag recognition on a negative definite graph
    fn type_tag(&self) -> (Option<TypeTag>, Option<&'static str>) {
        let n = self.vertices.len();
        if n >= 2
            && self
                .vertices
                .iter()
                .any(|v| v.genus > 0 || v.marker != SingMarker::Smooth)
        {
            return (None, Some("mixed components: no recognized type"));
        }
        match self.shape() {
            Shape::Single => {
                let v = &self.vertices[0];
                match (v.genus, v.marker) {
                    (0, SingMarker::Smooth) => (Some(TypeTag::A(1)), None),
                    (1, SingMarker::Smooth) => (Some(TypeTag::Ell), None),
                    (0, SingMarker::Node) => (Some(TypeTag::ACusp(1)), None),
                    (0, SingMarker::Cusp) => {
                        (None, Some("cuspidal component: not a simple normal crossing configuration"))
                    }
                    _ => (None, Some("component genus too large for a recognized type")),
                }
            }
            Shape::Chain => (Some(TypeTag::A(n)), None),
            Shape::Cycle => (Some(TypeTag::ACusp(n)), None),
            Shape::Star4 { arm_dets } => {
                if arm_dets.iter().all(|d| *d == BigInt::from(2)) {
                    (Some(TypeTag::DTilde(4)), None)
                } else {
                    (None, Some("degree-4 center with arms other than four (-2)-leaves"))
                }
            }
            Shape::TwoForks { leaf_dets } => {
                if leaf_dets.iter().all(|d| *d == BigInt::from(2)) {
                    (Some(TypeTag::DTilde(n - 1)), None)
                } else {
                    (None, Some("two forks whose leaves are not (-2)-curves"))
                }
            }
            Shape::Fork { arm_dets, .. } => {
                let mut d = arm_dets.clone();
                d.sort();
                let key: Vec<Option<u64>> = d.iter().map(|x| x.to_u64()).collect();
                match (key[0], key[1], key[2]) {
                    (Some(2), Some(2), Some(_)) => (Some(TypeTag::D(n)), None),
                    (Some(2), Some(3), Some(3)) => (Some(TypeTag::E6), None),
                    (Some(2), Some(3), Some(4)) => (Some(TypeTag::E7), None),
                    (Some(2), Some(3), Some(5)) => (Some(TypeTag::E8), None),
                    (Some(3), Some(3), Some(3)) => (Some(TypeTag::ETilde6), None),
                    (Some(2), Some(4), Some(4)) => (Some(TypeTag::ETilde7), None),
                    (Some(2), Some(3), Some(6)) => (Some(TypeTag::ETilde8), None),
                    _ => (None, Some("fork arm determinants match no recognized type")),
                }
            }
            Shape::Other => (None, Some("shape matches no recognized type")),
        }
    }

    // fiber-type recognition for semi-definite all-(-2) configurations
    fn affine_tag(&self) -> Option<(TypeTag, u64)> {
        if !self.attachments.is_empty() {
            return None;
        }
        if self
            .vertices
            .iter()
            .any(|v| v.genus > 0 || v.marker != SingMarker::Smooth || v.b != 2)
        {
            return None;
        }
        let n = self.vertices.len();
        match self.shape() {
            Shape::Cycle => Some((TypeTag::ACusp(n), 1)),
            Shape::Star4 { arm_dets } => {
                if arm_dets.iter().all(|d| *d == BigInt::from(2)) {
                    Some((TypeTag::DTilde(4), 2))
                } else {
                    None
                }
            }
            Shape::TwoForks { leaf_dets } => {
                if leaf_dets.iter().all(|d| *d == BigInt::from(2)) {
                    Some((TypeTag::DTilde(n - 1), 2))
                } else {
                    None
                }
            }
            Shape::Fork { arm_dets, .. } => {
                let mut d: Vec<Option<u64>> = arm_dets.iter().map(|x| x.to_u64()).collect();
                d.sort();
                match (d[0], d[1], d[2]) {
                    (Some(3), Some(3), Some(3)) => Some((TypeTag::ETilde6, 3)),
                    (Some(2), Some(4), Some(4)) => Some((TypeTag::ETilde7, 4)),
                    (Some(2), Some(3), Some(6)) => Some((TypeTag::ETilde8, 6)),
                    _ => None,
                }
            }
            _ => None,
        }
    }

    fn fork_center(&self) -> Option<usize> {
        match self.shape() {
            Shape::Fork { center, .. } => Some(center),
            _ => None,
        }
    }
}

fn grade_of(amin_exc: &Rat, amin_all: &Rat) -> Grade {
    let zero = Rat::zero();
    let neg1 = Rat::int(-1);
    if *amin_all > zero {
        Grade::Terminal
    } else if *amin_all >= zero {
        Grade::Canonical
    } else if *amin_all > neg1 {
        Grade::Klt
    } else if *amin_exc > neg1 && *amin_all >= neg1 {
        Grade::Plt
    } else if *amin_all >= neg1 {
        Grade::Lc
    } else {
        Grade::NotLc
    }
}

fn push_eps_notes(notes: &mut Vec<String>, amin: &Rat, eps: &Rat) {
    let bar = Rat::int(-1) + eps;
    notes.push(format!("eps-lt={}", *amin > bar));
    notes.push(format!("eps-lc={}", *amin >= bar));
}

fn parse_err(line: usize, msg: &str) -> Error {
    Error::Parse { line, msg: msg.to_string() }
}

fn attr<'a>(tok: &'a str, line: usize) -> Result<(&'a str, &'a str)> {
    tok.split_once('=')
        .ok_or_else(|| parse_err(line, &format!("expected key=value, got '{}'", tok)))
}

fn parse_u64(s: &str, line: usize) -> Result<u64> {
    s.parse()
        .map_err(|_| parse_err(line, &format!("bad integer '{}'", s)))
}

enum Shape {
    Single,
    Chain,
    Cycle,
    Fork { center: usize, arm_dets: Vec<BigInt> },
    Star4 { arm_dets: Vec<BigInt> },
    TwoForks { leaf_dets: Vec<BigInt> },
    Other,
}

/// Solved discrepancies, in vertex insertion order.
#[derive(Debug, Clone)]
pub struct PullbackData {
    ids: Vec<String>,
    values: Vec<Rat>,
}

impl PullbackData {
    pub fn iter(&self) -> impl Iterator<Item = (&str, &Rat)> {
        self.ids.iter().map(|s| s.as_str()).zip(self.values.iter())
    }

    pub fn get(&self, id: &str) -> Option<&Rat> {
        self.ids.iter().position(|s| s == id).map(|i| &self.values[i])
    }

    pub fn min(&self) -> Option<&Rat> {
        self.values.iter().min()
    }

    pub fn values(&self) -> &[Rat] {
        &self.values
    }
}

/// Discrepancy grade of the contracted point, boundary included.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Grade {
    Terminal,
    Canonical,
    Klt,
    Plt,
    Lc,
    NotLc,
}

impl std::fmt::Display for Grade {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Grade::Terminal => "terminal",
            Grade::Canonical => "canonical",
            Grade::Klt => "klt",
            Grade::Plt => "plt",
            Grade::Lc => "lc",
            Grade::NotLc => "notlc",
        };
        f.write_str(s)
    }
}

/// Recognized singularity type. The A/D/E tags cover the klt families; the
/// tilde tags and `Ell`/`ACusp` cover the strictly log canonical ones.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TypeTag {
    A(usize),
    D(usize),
    E6,
    E7,
    E8,
    Ell,
    ACusp(usize),
    DTilde(usize),
    ETilde6,
    ETilde7,
    ETilde8,
}

impl std::fmt::Display for TypeTag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            TypeTag::A(n) => write!(f, "A({})", n),
            TypeTag::D(n) => write!(f, "D({})", n),
            TypeTag::E6 => write!(f, "E6"),
            TypeTag::E7 => write!(f, "E7"),
            TypeTag::E8 => write!(f, "E8"),
            TypeTag::Ell => write!(f, "Ell"),
            TypeTag::ACusp(n) => write!(f, "A~({})", n),
            TypeTag::DTilde(n) => write!(f, "D~({})", n),
            TypeTag::ETilde6 => write!(f, "E~6"),
            TypeTag::ETilde7 => write!(f, "E~7"),
            TypeTag::ETilde8 => write!(f, "E~8"),
        }
    }
}

/// Classification verdict: grade, 1 + minimal discrepancy (absent for the
/// empty graph, where it is +infinity), recognized type, and index.
#[derive(Debug, Clone)]
pub struct SingClass {
    pub grade: Grade,
    pub eps_grade: Option<Rat>,
    pub type_tag: Option<TypeTag>,
    pub index: Option<u64>,
    pub notes: Vec<String>,
}

/// Whether the classified point is one of the exceptional types: the klt
/// fork families E6/E7/E8 and the lc types Ell, D~(4), E~6, E~7, E~8.
pub fn is_exceptional_sing(c: &SingClass) -> Result<bool> {
    let tag = c.type_tag.as_ref().ok_or(Error::Unclassified)?;
    Ok(matches!(
        tag,
        TypeTag::E6
            | TypeTag::E7
            | TypeTag::E8
            | TypeTag::Ell
            | TypeTag::DTilde(4)
            | TypeTag::ETilde6
            | TypeTag::ETilde7
            | TypeTag::ETilde8
    ))
}

/// Multiplicity of the cyclic quotient contracted from a chain:
/// 2 + sum(a_i - 2). The empty chain is a smooth point of multiplicity 1.
pub fn multiplicity_chain(chain: &HJChain) -> Result<u64> {
    if chain.entries.is_empty() {
        return Ok(1);
    }
    let mut mult = 2u64;
    for &a in &chain.entries {
        if a < 2 {
            return Err(Error::BadEntry(format!("chain entry {} < 2", a)));
        }
        mult += a - 2;
    }
    Ok(mult)
}

/// For a klt fork of type E6/E7/E8 with central self-intersection -p, tests
/// the bound p < 2/eps separating candidates for eps-log terminality.
pub fn eps_lt_bound_check(g: &DualGraph, eps: &Rat) -> Result<bool> {
    if !eps.is_positive() {
        return Err(Error::OutOfRange(format!("eps {} must be positive", eps)));
    }
    let class = g.classify(None)?;
    match class.type_tag {
        Some(TypeTag::E6) | Some(TypeTag::E7) | Some(TypeTag::E8) => {}
        _ => return Err(Error::NotForkType),
    }
    let center = g.fork_center().ok_or(Error::NotForkType)?;
    let p = g.vertices()[center].b;
    Ok(Rat::from(p) * eps < Rat::int(2))
}
