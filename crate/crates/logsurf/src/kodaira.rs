//! Degenerate fibers of minimal elliptic fibrations: recognizing the fiber
//! type from configuration data, the correspondence between fibers and
//! their dlt models, and the multiple-fiber arithmetic.

use std::collections::HashMap;

use crate::rat::Rat;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FiberMarker {
    Smooth,
    Node,
    Cusp,
}

#[derive(Debug, Clone)]
pub struct FiberComponent {
    pub id: String,
    pub genus: u64,
    pub marker: FiberMarker,
    /// self-intersection; 0 for a full fiber, -2 for a component of a
    /// degenerate one
    pub self_int: i64,
}

/// One intersection point of two components. `order` is the local
/// multiplicity (2 = simple tangency); contacts carrying the same `shared`
/// label happen at one point of the surface.
#[derive(Debug, Clone)]
pub struct Contact {
    pub a: usize,
    pub b: usize,
    pub order: u64,
    pub shared: Option<String>,
}

#[derive(Debug, Clone, Default)]
pub struct FiberGraph {
    components: Vec<FiberComponent>,
    contacts: Vec<Contact>,
    multiplicity: u64,
    ids: HashMap<String, usize>,
}

impl FiberGraph {
    pub fn new() -> FiberGraph {
        FiberGraph { components: Vec::new(), contacts: Vec::new(), multiplicity: 1, ids: HashMap::new() }
    }

    pub fn add_component(
        &mut self,
        id: &str,
        genus: u64,
        marker: FiberMarker,
        self_int: i64,
    ) -> Result<usize> {
        if self.ids.contains_key(id) {
            return Err(Error::BadEntry(format!("duplicate component {}", id)));
        }
        let idx = self.components.len();
        self.ids.insert(id.to_string(), idx);
        self.components.push(FiberComponent { id: id.to_string(), genus, marker, self_int });
        Ok(idx)
    }

    pub fn add_contact(&mut self, a: &str, b: &str, order: u64, shared: Option<&str>) -> Result<()> {
        let ia = self.lookup(a)?;
        let ib = self.lookup(b)?;
        if ia == ib {
            return Err(Error::BadEntry(format!("component {} cannot meet itself; use sing=node", a)));
        }
        if order == 0 {
            return Err(Error::BadEntry("contact order must be positive".into()));
        }
        self.contacts.push(Contact { a: ia, b: ib, order, shared: shared.map(str::to_string) });
        Ok(())
    }

    pub fn set_multiplicity(&mut self, m: u64) -> Result<()> {
        if m == 0 {
            return Err(Error::BadEntry("fiber multiplicity must be positive".into()));
        }
        self.multiplicity = m;
        Ok(())
    }

    pub fn components(&self) -> &[FiberComponent] {
        &self.components
    }

    pub fn multiplicity(&self) -> u64 {
        self.multiplicity
    }

    fn lookup(&self, id: &str) -> Result<usize> {
        self.ids.get(id).copied().ok_or_else(|| Error::UnknownComponent(id.to_string()))
    }

    /// Text format shared with dual graphs:
    ///
    /// ```text
    /// v <id> b=<int> [g=<int>] [sing=node|cusp]   # self-intersection -b
    /// e <id1> <id2>                               # one transverse point
    /// meet <id1> <id2> mult=<k> [shared=<label>]
    /// fiber m=<int>
    /// ```
    pub fn parse(text: &str) -> Result<FiberGraph> {
        let mut fg = FiberGraph::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = lineno + 1;
            let perr = |msg: String| Error::Parse { line, msg };
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let mut words = content.split_whitespace();
            let head = words.next().expect("nonempty");
            let rest: Vec<&str> = words.collect();
            match head {
                "v" => {
                    let (id, attrs) = rest
                        .split_first()
                        .ok_or_else(|| perr("v needs a component id".into()))?;
                    let mut b: Option<i64> = None;
                    let mut genus = 0u64;
                    let mut marker = FiberMarker::Smooth;
                    for attr in attrs {
                        if let Some(val) = attr.strip_prefix("b=") {
                            let v: i64 = val
                                .parse()
                                .map_err(|_| perr(format!("bad self-intersection {}", val)))?;
                            if v < 0 {
                                return Err(perr(format!("b must be >= 0, got {}", v)));
                            }
                            b = Some(v);
                        } else if let Some(val) = attr.strip_prefix("g=") {
                            genus =
                                val.parse().map_err(|_| perr(format!("bad genus {}", val)))?;
                        } else if let Some(val) = attr.strip_prefix("sing=") {
                            marker = match val {
                                "node" => FiberMarker::Node,
                                "cusp" => FiberMarker::Cusp,
                                _ => return Err(perr(format!("unknown marker {}", val))),
                            };
                        } else {
                            return Err(perr(format!("unknown attribute {}", attr)));
                        }
                    }
                    let b = b.ok_or_else(|| perr(format!("component {} needs b=", id)))?;
                    fg.add_component(id, genus, marker, -b)
                        .map_err(|e| perr(e.to_string()))?;
                }
                "e" => {
                    let [a, b] = rest[..] else {
                        return Err(perr("e needs exactly two component ids".into()));
                    };
                    fg.add_contact(a, b, 1, None).map_err(|e| perr(e.to_string()))?;
                }
                "meet" => {
                    let (pair, attrs) = rest.split_at(if rest.len() >= 2 { 2 } else { rest.len() });
                    let [a, b] = pair[..] else {
                        return Err(perr("meet needs two component ids".into()));
                    };
                    let mut order = 1u64;
                    let mut shared: Option<&str> = None;
                    for attr in attrs {
                        if let Some(val) = attr.strip_prefix("mult=") {
                            order = val
                                .parse()
                                .map_err(|_| perr(format!("bad multiplicity {}", val)))?;
                        } else if let Some(val) = attr.strip_prefix("shared=") {
                            shared = Some(val);
                        } else {
                            return Err(perr(format!("unknown attribute {}", attr)));
                        }
                    }
                    fg.add_contact(a, b, order, shared).map_err(|e| perr(e.to_string()))?;
                }
                "fiber" => {
                    let [attr] = rest[..] else {
                        return Err(perr("fiber takes m=<int>".into()));
                    };
                    let val = attr
                        .strip_prefix("m=")
                        .ok_or_else(|| perr("fiber takes m=<int>".into()))?;
                    let m =
                        val.parse().map_err(|_| perr(format!("bad multiplicity {}", val)))?;
                    fg.set_multiplicity(m).map_err(|e| perr(e.to_string()))?;
                }
                _ => return Err(perr(format!("unknown directive {}", head))),
            }
        }
        Ok(fg)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KodairaType {
    I(u64),
    /// multiple fiber: (b, m) with m >= 2
    MI(u64, u64),
    II,
    III,
    IV,
    IStar(u64),
    IIStar,
    IIIStar,
    IVStar,
}

impl KodairaType {
    /// Number of components the printed diagram of this type carries.
    pub fn component_count(&self) -> u64 {
        match self {
            KodairaType::I(b) | KodairaType::MI(b, _) => (*b).max(1),
            KodairaType::II => 1,
            KodairaType::III => 2,
            KodairaType::IV => 3,
            KodairaType::IStar(b) => b + 5,
            KodairaType::IIStar => 9,
            KodairaType::IIIStar => 8,
            KodairaType::IVStar => 7,
        }
    }
}

impl std::fmt::Display for KodairaType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            KodairaType::I(b) => write!(f, "I({})", b),
            KodairaType::MI(b, m) => write!(f, "mI({},{})", b, m),
            KodairaType::II => write!(f, "II"),
            KodairaType::III => write!(f, "III"),
            KodairaType::IV => write!(f, "IV"),
            KodairaType::IStar(b) => write!(f, "I*({})", b),
            KodairaType::IIStar => write!(f, "II*"),
            KodairaType::IIIStar => write!(f, "III*"),
            KodairaType::IVStar => write!(f, "IV*"),
        }
    }
}

/// Recognizes the fiber type. Multiplicity > 1 is legal only on type I
/// fibers, the non-simply connected ones.
pub fn kodaira_classify(fg: &FiberGraph) -> Result<KodairaType> {
    let base = classify_reduced(fg)?;
    if fg.multiplicity > 1 {
        return match base {
            KodairaType::I(b) => Ok(KodairaType::MI(b, fg.multiplicity)),
            t => Err(Error::MultipleForbidden(format!("{} cannot be a multiple fiber", t))),
        };
    }
    Ok(base)
}

fn classify_reduced(fg: &FiberGraph) -> Result<KodairaType> {
    let n = fg.components.len();
    if n == 0 {
        return Err(Error::NotElliptic("empty fiber".into()));
    }
    if n == 1 {
        let c = &fg.components[0];
        if c.self_int != 0 {
            return Err(Error::NotElliptic(format!(
                "an irreducible fiber has self-intersection 0, got {}",
                c.self_int
            )));
        }
        return match (c.genus, c.marker) {
            (1, FiberMarker::Smooth) => Ok(KodairaType::I(0)),
            (0, FiberMarker::Node) => Ok(KodairaType::I(1)),
            (0, FiberMarker::Cusp) => Ok(KodairaType::II),
            _ => Err(Error::NotElliptic(
                "an irreducible fiber is elliptic, nodal rational, or cuspidal rational".into(),
            )),
        };
    }
    for c in &fg.components {
        if c.genus != 0 || c.marker != FiberMarker::Smooth {
            return Err(Error::NotElliptic(format!(
                "component {} of a reducible fiber must be smooth rational",
                c.id
            )));
        }
        if c.self_int != -2 {
            return Err(Error::NotElliptic(format!(
                "component {} of a minimal degenerate fiber must be a -2-curve",
                c.id
            )));
        }
    }
    if n == 2 {
        return match fg.contacts[..] {
            [Contact { order: 2, .. }] => Ok(KodairaType::III),
            [Contact { order: 1, shared: ref s1, .. }, Contact { order: 1, shared: ref s2, .. }]
                if s1.is_none() || s1 != s2 =>
            {
                Ok(KodairaType::I(2))
            }
            _ => Err(Error::NotElliptic(
                "two components meet either at one tangent point or at two simple points".into(),
            )),
        };
    }
    // three concurrent lines: all three pairs at one shared point
    if n == 3 && fg.contacts.len() == 3 {
        let mut pairs: Vec<(usize, usize)> =
            fg.contacts.iter().map(|c| (c.a.min(c.b), c.a.max(c.b))).collect();
        pairs.sort_unstable();
        pairs.dedup();
        let label = &fg.contacts[0].shared;
        if pairs.len() == 3
            && label.is_some()
            && fg.contacts.iter().all(|c| c.order == 1 && &c.shared == label)
        {
            return Ok(KodairaType::IV);
        }
    }
    // everything else is a simple configuration: transverse, no three
    // components concurrent, no repeated pair
    let mut adj = vec![Vec::new(); n];
    let mut seen_pairs = std::collections::HashSet::new();
    let mut seen_labels = std::collections::HashSet::new();
    for c in &fg.contacts {
        if c.order != 1 {
            return Err(Error::NotElliptic("tangency occurs only in type III".into()));
        }
        if !seen_pairs.insert((c.a.min(c.b), c.a.max(c.b))) {
            return Err(Error::NotElliptic(format!(
                "components {} and {} meet twice; only a two-component wheel does that",
                fg.components[c.a].id, fg.components[c.b].id
            )));
        }
        if let Some(l) = &c.shared {
            if !seen_labels.insert(l.clone()) {
                return Err(Error::NotElliptic(
                    "three concurrent components only occur in type IV".into(),
                ));
            }
        }
        adj[c.a].push(c.b);
        adj[c.b].push(c.a);
    }
    if !connected(&adj) {
        return Err(Error::NotElliptic("fiber must be connected".into()));
    }
    let e = fg.contacts.len();
    if e == n && adj.iter().all(|v| v.len() == 2) {
        return Ok(KodairaType::I(n as u64));
    }
    if e != n - 1 {
        return Err(Error::NotElliptic("configuration is neither a wheel nor a tree".into()));
    }
    classify_tree(fg, &adj)
}

fn classify_tree(fg: &FiberGraph, adj: &[Vec<usize>]) -> Result<KodairaType> {
    let n = adj.len();
    let deg4: Vec<usize> = (0..n).filter(|&v| adj[v].len() == 4).collect();
    let deg3: Vec<usize> = (0..n).filter(|&v| adj[v].len() == 3).collect();
    if adj.iter().any(|v| v.len() > 4) {
        return Err(Error::NotElliptic("a fiber component meets at most four others".into()));
    }
    match (deg4.len(), deg3.len()) {
        (1, 0) if n == 5 => Ok(KodairaType::IStar(0)),
        (0, 2) => {
            // two branch vertices, each holding two leaves, joined by a chain
            for &v in &deg3 {
                let leaves = adj[v].iter().filter(|&&w| adj[w].len() == 1).count();
                if leaves != 2 {
                    return Err(Error::NotElliptic(format!(
                        "branch component {} must carry two ends",
                        fg.components[v].id
                    )));
                }
            }
            Ok(KodairaType::IStar(n as u64 - 5))
        }
        (0, 1) => {
            let mut arms: Vec<u64> = adj[deg3[0]]
                .iter()
                .map(|&w| arm_length(adj, deg3[0], w))
                .collect::<Result<_>>()?;
            arms.sort_unstable();
            match arms[..] {
                [1, 2, 5] => Ok(KodairaType::IIStar),
                [1, 3, 3] => Ok(KodairaType::IIIStar),
                [2, 2, 2] => Ok(KodairaType::IVStar),
                _ => Err(Error::NotElliptic(format!(
                    "no fiber type has a star with arms {:?}",
                    arms
                ))),
            }
        }
        _ => Err(Error::NotElliptic("configuration matches no fiber type".into())),
    }
}

fn arm_length(adj: &[Vec<usize>], from: usize, first: usize) -> Result<u64> {
    let mut prev = from;
    let mut cur = first;
    let mut len = 1;
    loop {
        let next: Vec<usize> = adj[cur].iter().copied().filter(|&w| w != prev).collect();
        match next[..] {
            [] => return Ok(len),
            [w] => {
                prev = cur;
                cur = w;
                len += 1;
            }
            _ => return Err(Error::NotElliptic("branch on an arm".into())),
        }
    }
}

fn connected(adj: &[Vec<usize>]) -> bool {
    let mut seen = vec![false; adj.len()];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(v) = stack.pop() {
        for &w in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    seen.iter().all(|&s| s)
}

/// The singular fiber of the dlt model of an elliptic fibration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DltClass {
    Ell,
    ATilde(u64),
    DTilde(u64),
    ETilde6,
    ETilde7,
    ETilde8,
}

impl std::fmt::Display for DltClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            DltClass::Ell => write!(f, "Ell"),
            DltClass::ATilde(n) => write!(f, "A~({})", n),
            DltClass::DTilde(n) => write!(f, "D~({})", n),
            DltClass::ETilde6 => write!(f, "E~6"),
            DltClass::ETilde7 => write!(f, "E~7"),
            DltClass::ETilde8 => write!(f, "E~8"),
        }
    }
}

/// Maps a fiber to the class of its dlt model and the complement index of
/// the model.
pub fn dlt_model_map(t: KodairaType) -> (DltClass, u64) {
    match t {
        KodairaType::I(0) | KodairaType::MI(0, _) => (DltClass::Ell, 1),
        KodairaType::I(b) | KodairaType::MI(b, _) => (DltClass::ATilde(b), 1),
        KodairaType::IStar(b) => (DltClass::DTilde(b + 4), 2),
        KodairaType::IV | KodairaType::IVStar => (DltClass::ETilde6, 3),
        KodairaType::III | KodairaType::IIIStar => (DltClass::ETilde7, 4),
        KodairaType::II | KodairaType::IIStar => (DltClass::ETilde8, 6),
    }
}

/// Complement index of a dlt model class: 1, 2, 3, 4, or 6.
pub fn lc_index_of_class(c: DltClass) -> u64 {
    match c {
        DltClass::Ell | DltClass::ATilde(_) => 1,
        DltClass::DTilde(_) => 2,
        DltClass::ETilde6 => 3,
        DltClass::ETilde7 => 4,
        DltClass::ETilde8 => 6,
    }
}

/// Solves 2 - 2/delta = sum of (1 - 1/r_i) for two or three multiple
/// fibers over an affine base, returning delta and the complement index of
/// the configuration.
pub fn multiple_fiber_solve(rs: &[u64]) -> Result<(Rat, u64)> {
    if rs.len() < 2 || rs.len() > 3 {
        return Err(Error::OutOfRange(format!(
            "two or three multiple fibers expected, got {}",
            rs.len()
        )));
    }
    let mut s = Rat::zero();
    for &r in rs {
        if r < 2 {
            return Err(Error::BadEntry(format!("fiber multiplicity {} < 2", r)));
        }
        s = s + Rat::one() - Rat::new(1, r as i64);
    }
    if s >= Rat::int(2) {
        return Err(Error::Infeasible(format!("total degree {} leaves no room for delta", s)));
    }
    let delta = Rat::int(2) / (Rat::int(2) - s);
    let mut sorted = rs.to_vec();
    sorted.sort_unstable();
    let n = match sorted[..] {
        [_, _] => 1,
        [2, 2, _] => 2,
        [2, 3, 3] => 3,
        [2, 3, 4] => 4,
        [2, 3, 5] => 6,
        _ => unreachable!("every other triple has total degree >= 2"),
    };
    Ok((delta, n))
}
