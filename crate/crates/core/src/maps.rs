//! Finite maps between groups, homomorphism checking and the usual
//! image/kernel taxonomy.

use std::collections::HashMap;
use std::fmt;

use crate::element::Element;
use crate::error::{domain, Error, Result};
use crate::group::{insert_index, FiniteGroup};
use crate::subgroup::{trivial_subgroup, Subgroup};

/// A finite map: key/value pairs with pairwise distinct keys, kept in
/// insertion order. Equality is pointwise over the domain.
#[derive(Clone, Default)]
pub struct GroupMap {
    pairs: Vec<(Element, Element)>,
    index: HashMap<Element, usize>,
}

impl fmt::Debug for GroupMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.pairs.iter().map(|(k, v)| (k, v))).finish()
    }
}

impl PartialEq for GroupMap {
    fn eq(&self, other: &Self) -> bool {
        self.len() == other.len()
            && self.pairs.iter().all(|(k, v)| other.get(k) == Some(v))
    }
}

impl Eq for GroupMap {}

impl GroupMap {
    pub fn from_pairs(pairs: Vec<(Element, Element)>) -> Result<GroupMap> {
        let mut index = HashMap::with_capacity(pairs.len());
        for (i, (k, _)) in pairs.iter().enumerate() {
            if index.insert(k.clone(), i).is_some() {
                return domain(format!("map has two pairs with key {k}"));
            }
        }
        Ok(GroupMap { pairs, index })
    }

    /// `[(x, f(x)) for x in domain]`.
    pub fn from_fn<F>(domain: &[Element], mut f: F) -> Result<GroupMap>
    where
        F: FnMut(&Element) -> Element,
    {
        GroupMap::from_pairs(domain.iter().map(|x| (x.clone(), f(x))).collect())
    }

    pub fn try_from_fn<F>(domain: &[Element], mut f: F) -> Result<GroupMap>
    where
        F: FnMut(&Element) -> Result<Element>,
    {
        let pairs = domain.iter().map(|x| Ok((x.clone(), f(x)?))).collect::<Result<Vec<_>>>()?;
        GroupMap::from_pairs(pairs)
    }

    pub fn identity(domain: &[Element]) -> GroupMap {
        GroupMap::from_fn(domain, Element::clone).expect("roster has distinct elements")
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn pairs(&self) -> &[(Element, Element)] {
        &self.pairs
    }

    pub fn domain(&self) -> impl Iterator<Item = &Element> {
        self.pairs.iter().map(|(k, _)| k)
    }

    pub fn get(&self, x: &Element) -> Option<&Element> {
        self.index.get(x).map(|&i| &self.pairs[i].1)
    }

    /// Strict application: `x` must be in the domain.
    pub fn apply(&self, x: &Element) -> Result<&Element> {
        self.get(x).ok_or_else(|| Error::Domain(format!("{x} is outside the map's domain")))
    }

    /// The map restricted to `domain`, in that order.
    pub fn restrict(&self, domain: &[Element]) -> Result<GroupMap> {
        GroupMap::try_from_fn(domain, |x| self.apply(x).cloned())
    }
}

pub fn mapply<'m>(m: &'m GroupMap, x: &Element) -> Result<&'m Element> {
    m.apply(x)
}

/// `m2 ∘ m1` on the domain of `m1`.
pub fn compose_maps(m2: &GroupMap, m1: &GroupMap) -> Result<GroupMap> {
    GroupMap::try_from_fn(&m1.domain().cloned().collect::<Vec<_>>(), |x| {
        let y = m1.apply(x)?;
        m2.get(y).cloned().ok_or_else(|| {
            Error::Domain(format!("{x} maps to {y}, which is outside the domain of the outer map"))
        })
    })
}

/// First counterexample to the homomorphism property.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HomWitness {
    /// An element of the source the map is not defined on.
    DomainCoverage(Element),
    /// The source identity, whose image is not the target identity.
    Identity(Element),
    /// A source element whose image is not in the target.
    Codomain(Element),
    /// A pair whose product is not sent to the product of the images.
    Operation(Element, Element),
}

impl fmt::Display for HomWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HomWitness::DomainCoverage(x) => write!(f, "domain-coverage: {x} has no image"),
            HomWitness::Identity(e) => write!(f, "identity: {e} is not sent to the identity"),
            HomWitness::Codomain(x) => write!(f, "codomain: image of {x} is outside the target"),
            HomWitness::Operation(x, y) => write!(f, "operation: fails for ({x}, {y})"),
        }
    }
}

/// Images as target indices, or the first homomorphism counterexample.
fn image_indices(m: &GroupMap, g: &FiniteGroup, h: &FiniteGroup) -> Result<Vec<usize>, HomWitness> {
    let mut out = Vec::with_capacity(g.order());
    for x in g.elements() {
        match m.get(x) {
            Some(_) => {}
            None => return Err(HomWitness::DomainCoverage(x.clone())),
        }
    }
    if m.get(g.identity()) != Some(h.identity()) {
        return Err(HomWitness::Identity(g.identity().clone()));
    }
    for x in g.elements() {
        match h.index_of(m.get(x).expect("covered")) {
            Some(i) => out.push(i),
            None => return Err(HomWitness::Codomain(x.clone())),
        }
    }
    let n = g.order();
    for a in 0..n {
        for b in 0..n {
            if out[g.op_index(a, b)] != h.op_index(out[a], out[b]) {
                return Err(HomWitness::Operation(g.elt(a).clone(), g.elt(b).clone()));
            }
        }
    }
    Ok(out)
}

/// `Ok(())` iff `m` is a homomorphism from `g` to `h`; otherwise the first
/// failure, scanning in roster order.
pub fn homomorphism_check(m: &GroupMap, g: &FiniteGroup, h: &FiniteGroup) -> Result<(), HomWitness> {
    image_indices(m, g, h).map(|_| ())
}

fn require_hom(m: &GroupMap, g: &FiniteGroup, h: &FiniteGroup) -> Result<Vec<usize>> {
    image_indices(m, g, h).map_err(|w| Error::Domain(format!("not a homomorphism ({w})")))
}

/// Image of `g`, ordered by the roster of `h`.
pub fn image(m: &GroupMap, g: &FiniteGroup, h: &FiniteGroup) -> Result<Subgroup> {
    let images = require_hom(m, g, h)?;
    let mut sorted = Vec::new();
    for i in images.into_iter().rev() {
        insert_index(&mut sorted, i);
    }
    Subgroup::from_indices(h, sorted)
}

/// Elements of `g` sent to the identity, in `g`'s roster order.
pub fn kernel(m: &GroupMap, g: &FiniteGroup, h: &FiniteGroup) -> Result<Subgroup> {
    let images = require_hom(m, g, h)?;
    let idx = (0..g.order()).filter(|&i| images[i] == 0).collect();
    Subgroup::from_indices(g, idx)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Classification {
    pub epimorphism: bool,
    /// Trivial kernel.
    pub monomorphism: bool,
    pub isomorphism: bool,
}

pub fn classify(m: &GroupMap, g: &FiniteGroup, h: &FiniteGroup) -> Result<Classification> {
    let epimorphism = image(m, g, h)?.group() == h;
    let monomorphism = kernel(m, g, h)? == trivial_subgroup(g);
    Ok(Classification { epimorphism, monomorphism, isomorphism: epimorphism && monomorphism })
}

pub fn is_isomorphism(m: &GroupMap, g: &FiniteGroup, h: &FiniteGroup) -> bool {
    matches!(classify(m, g, h), Ok(c) if c.isomorphism)
}

/// First `x` in `g`'s roster with `m(x) = y`.
pub fn preimage<'g>(y: &Element, m: &GroupMap, g: &'g FiniteGroup) -> Option<&'g Element> {
    g.elements().iter().find(|x| m.get(x) == Some(y))
}

/// Inverse of an isomorphism `g -> h`, with domain the roster of `h`.
pub fn inv_isomorphism(m: &GroupMap, g: &FiniteGroup, h: &FiniteGroup) -> Result<GroupMap> {
    if !classify(m, g, h)?.isomorphism {
        return domain("inverse requested for a map that is not an isomorphism");
    }
    let mut back: HashMap<&Element, &Element> = HashMap::with_capacity(g.order());
    for x in g.elements().iter().rev() {
        back.insert(m.apply(x)?, x);
    }
    GroupMap::try_from_fn(h.elements(), |y| {
        back.get(y).map(|x| (*x).clone()).ok_or_else(|| Error::Internal(format!("{y} has no preimage")))
    })
}
