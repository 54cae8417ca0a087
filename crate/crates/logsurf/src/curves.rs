//! n-complement and n-semicomplement feasibility on a rational curve and on
//! nodal configurations of rational curves, by exact degree bookkeeping.

use crate::rat::Rat;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Topology {
    SingleP1,
    Chain,
    Cycle,
    Tree,
}

/// One rational component. `node_count` counts the local branches at nodes
/// lying on this component (a self-node contributes 2).
#[derive(Debug, Clone)]
pub struct Component {
    pub id: String,
    pub compact: bool,
    pub node_count: u64,
}

/// A connected nodal curve, abstracted to per-component node counts: the
/// degree bookkeeping never needs actual positions.
#[derive(Debug, Clone)]
pub struct CurveModel {
    components: Vec<Component>,
    topology: Topology,
}

impl CurveModel {
    pub fn single_p1() -> CurveModel {
        CurveModel {
            components: vec![Component { id: "p1".into(), compact: true, node_count: 0 }],
            topology: Topology::SingleP1,
        }
    }

    /// A chain of k compact components; k = 1 degenerates to a single P^1.
    pub fn chain(k: usize) -> CurveModel {
        assert!(k >= 1, "chain needs at least one component");
        if k == 1 {
            return CurveModel::single_p1();
        }
        let components = (0..k)
            .map(|i| Component {
                id: format!("c{}", i + 1),
                compact: true,
                node_count: if i == 0 || i == k - 1 { 1 } else { 2 },
            })
            .collect();
        CurveModel { components, topology: Topology::Chain }
    }

    /// A cycle of k compact components; k = 1 is a single nodal rational
    /// curve, whose self-node contributes two branches.
    pub fn cycle(k: usize) -> CurveModel {
        assert!(k >= 1, "cycle needs at least one component");
        let components = (0..k)
            .map(|i| Component { id: format!("c{}", i + 1), compact: true, node_count: 2 })
            .collect();
        CurveModel { components, topology: Topology::Cycle }
    }

    /// General constructor for tree-like models, noncompact ends included.
    pub fn from_parts(topology: Topology, components: Vec<Component>) -> Result<CurveModel> {
        if components.is_empty() {
            return Err(Error::BadEntry("model needs at least one component".into()));
        }
        if topology == Topology::Cycle && components.iter().any(|c| c.node_count != 2) {
            return Err(Error::BadEntry("cycle components must have node_count 2".into()));
        }
        Ok(CurveModel { components, topology })
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn topology(&self) -> Topology {
        self.topology
    }

    fn find(&self, id: &str) -> Option<&Component> {
        self.components.iter().find(|c| c.id == id)
    }
}

/// Boundary points with coefficients, addressed by component id. Points sit
/// at smooth positions of compact components.
#[derive(Debug, Clone)]
pub struct CurveBoundary {
    pub points: Vec<(String, Rat)>,
}

impl CurveBoundary {
    pub fn on_p1(coeffs: Vec<Rat>) -> CurveBoundary {
        CurveBoundary { points: coeffs.into_iter().map(|d| ("p1".to_string(), d)).collect() }
    }
}

/// A certificate that n(K + D^+) ~ 0 is achievable: per-point numerators
/// c_i of the complement coefficients c_i/n, the residual degree placed at
/// fresh points of each compact component, and whether the complement is
/// forced to be non-klt.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComplementCert {
    pub n: u64,
    pub numerators: Vec<u64>,
    pub extra_degree: Vec<(String, u64)>,
    pub nonklt: bool,
}

/// The forced numerator of a complement coefficient: n for d = 1, and
/// floor((n + 1) d) otherwise, which never exceeds n.
pub fn lower_bound(d: &Rat, n: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::OutOfRange("n must be positive".into()));
    }
    if d < &Rat::zero() || d > &Rat::one() {
        return Err(Error::OutOfRange(format!("coefficient {} outside [0, 1]", d)));
    }
    if d == &Rat::one() {
        return Ok(n);
    }
    let f = (Rat::from(n + 1) * d).floor();
    Ok(u64::try_from(f).expect("0 <= floor <= n"))
}

/// n-complement feasibility on P^1: a certificate exists iff the forced
/// numerators fit into degree 2n. The residual is placed greedily as full
/// points of weight n, then one smaller point.
pub fn p1_has_n_complement(coeffs: &[Rat], n: u64) -> Result<Option<ComplementCert>> {
    let lowers = coeffs.iter().map(|d| lower_bound(d, n)).collect::<Result<Vec<_>>>()?;
    let total: u64 = lowers.iter().sum();
    if total > 2 * n {
        return Ok(None);
    }
    let extra = 2 * n - total;
    let nonklt = lowers.iter().any(|&c| c == n) || extra >= n;
    Ok(Some(ComplementCert {
        n,
        numerators: lowers,
        extra_degree: vec![("p1".to_string(), extra)],
        nonklt,
    }))
}

/// Least n <= cap admitting an n-complement on P^1.
pub fn p1_min_complement(coeffs: &[Rat], cap: u64) -> Result<u64> {
    if cap == 0 {
        return Err(Error::OutOfRange("cap must be positive".into()));
    }
    for n in 1..=cap {
        if p1_has_n_complement(coeffs, n)?.is_some() {
            return Ok(n);
        }
    }
    Err(Error::CapExceeded { cap })
}

/// n-semicomplement feasibility on a nodal model: every compact component
/// must fit its forced numerators plus n per node branch into degree 2n.
/// Noncompact components are unconstrained, but carry no boundary points:
/// the model knows them only through their nodes, so a point prescribed
/// there would sit on a node.
pub fn nodal_semicomplement(
    model: &CurveModel,
    b: &CurveBoundary,
    n: u64,
) -> Result<Option<ComplementCert>> {
    if n == 0 {
        return Err(Error::OutOfRange("n must be positive".into()));
    }
    let mut numerators = Vec::with_capacity(b.points.len());
    let mut used: Vec<u64> = vec![0; model.components.len()];
    for (id, d) in &b.points {
        let comp = model
            .find(id)
            .ok_or_else(|| Error::UnknownComponent(format!("unknown component '{}'", id)))?;
        if !comp.compact {
            return Err(Error::BoundaryOnNode(format!(
                "component '{}' is noncompact: its only tracked positions are nodes",
                id
            )));
        }
        let c = lower_bound(d, n)?;
        numerators.push(c);
        let idx = model.components.iter().position(|x| x.id == *id).expect("found above");
        used[idx] += c;
    }
    let mut extra_degree = Vec::new();
    let mut any_node = false;
    for (idx, comp) in model.components.iter().enumerate() {
        if !comp.compact {
            continue;
        }
        any_node |= comp.node_count > 0;
        let budget = used[idx] + n * comp.node_count;
        if budget > 2 * n {
            return Ok(None);
        }
        extra_degree.push((comp.id.clone(), 2 * n - budget));
    }
    let nonklt = any_node
        || numerators.iter().any(|&c| c == n)
        || extra_degree.iter().any(|(_, e)| *e >= n);
    Ok(Some(ComplementCert { n, numerators, extra_degree, nonklt }))
}

/// Exceptionality on P^1: no non-klt Q-complement exists. Decided in closed
/// form: both boosting an existing point to coefficient 1 and adding a new
/// coefficient-1 point must overflow degree 2.
pub fn p1_is_exceptional(coeffs: &[Rat]) -> Result<bool> {
    let mut total = Rat::zero();
    let mut max = Rat::zero();
    for d in coeffs {
        if d < &Rat::zero() || d > &Rat::one() {
            return Err(Error::OutOfRange(format!("coefficient {} outside [0, 1]", d)));
        }
        total = total + d;
        if *d > max {
            max = d.clone();
        }
    }
    if total > Rat::int(2) {
        return Err(Error::NoComplement(format!("total degree {} exceeds 2", total)));
    }
    let one = Rat::one();
    Ok(&total - &max > one && total > one)
}
