use serde_json::{Map, Value};

use crate::error::{Error, Result};
use crate::gaps::{classify_pair, PairClass, Pregap};
use crate::poset::{ElementSet, Poset};

/// An order-preserving map between two posets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonotoneMap {
    dom: Poset,
    cod: Poset,
    image: Vec<usize>,
}

/// Validates `image` as an order-preserving map, reporting the first
/// violated pair `x <= y` in index order.
pub fn check_monotone(dom: &Poset, cod: &Poset, image: Vec<usize>) -> Result<MonotoneMap> {
    if image.len() != dom.len() {
        return Err(Error::Parse(format!(
            "assignment has {} entries for {} elements",
            image.len(),
            dom.len()
        )));
    }
    if let Some(&bad) = image.iter().find(|&&v| v >= cod.len()) {
        return Err(Error::UnknownElement(bad));
    }
    for x in 0..dom.len() {
        for y in dom.up_row(x).ones() {
            if !cod.leq(image[x], image[y]) {
                return Err(Error::MonotonicityViolation(
                    dom.label(x).to_owned(),
                    dom.label(y).to_owned(),
                ));
            }
        }
    }
    Ok(MonotoneMap {
        dom: dom.clone(),
        cod: cod.clone(),
        image,
    })
}

impl MonotoneMap {
    pub fn identity(p: &Poset) -> MonotoneMap {
        MonotoneMap {
            dom: p.clone(),
            cod: p.clone(),
            image: (0..p.len()).collect(),
        }
    }

    pub fn from_labels<S: AsRef<str>>(dom: &Poset, cod: &Poset, pairs: &[(S, S)]) -> Result<MonotoneMap> {
        let mut image = vec![None; dom.len()];
        for (x, y) in pairs {
            image[dom.index_of(x.as_ref())?] = Some(cod.index_of(y.as_ref())?);
        }
        let image = image
            .into_iter()
            .enumerate()
            .map(|(i, v)| v.ok_or_else(|| Error::Parse(format!("`{}` is unassigned", dom.label(i)))))
            .collect::<Result<Vec<_>>>()?;
        check_monotone(dom, cod, image)
    }

    pub fn dom(&self) -> &Poset {
        &self.dom
    }

    pub fn cod(&self) -> &Poset {
        &self.cod
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    pub fn apply(&self, x: usize) -> usize {
        self.image[x]
    }

    /// Image of a subset of the domain, as a subset of the codomain.
    pub fn image_of(&self, set: &ElementSet) -> Result<ElementSet> {
        if !set.is_hosted_by(&self.dom) {
            return Err(Error::HostMismatch);
        }
        ElementSet::from_indices(&self.cod, set.iter().map(|x| self.image[x]))
    }

    /// `next ∘ self`.
    pub fn then(&self, next: &MonotoneMap) -> Result<MonotoneMap> {
        if !self.cod.same_order(&next.dom) || self.cod.labels() != next.dom.labels() {
            return Err(Error::HostMismatch);
        }
        Ok(MonotoneMap {
            dom: self.dom.clone(),
            cod: next.cod.clone(),
            image: self.image.iter().map(|&y| next.image[y]).collect(),
        })
    }

    pub fn is_identity(&self) -> bool {
        self.dom.same_order(&self.cod) && self.image.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// `x <= y` iff `f(x) <= f(y)`.
    pub fn is_embedding(&self) -> bool {
        let n = self.dom.len();
        (0..n).all(|x| (0..n).all(|y| self.dom.leq(x, y) == self.cod.leq(self.image[x], self.image[y])))
    }

    /// Label-to-label JSON object in domain order.
    pub fn to_json(&self) -> Value {
        let mut map = Map::new();
        for (x, &y) in self.image.iter().enumerate() {
            map.insert(
                self.dom.label(x).to_owned(),
                Value::String(self.cod.label(y).to_owned()),
            );
        }
        Value::Object(map)
    }
}

/// Whether the image of the gap `g` is again a gap of the codomain.
pub fn preserves_gap(m: &MonotoneMap, g: &Pregap) -> Result<bool> {
    if !g.is_hosted_by(m.dom()) {
        return Err(Error::HostMismatch);
    }
    if !g.is_gap() {
        return Err(Error::NotAGap);
    }
    let a = m.image_of(g.a())?;
    let b = m.image_of(g.b())?;
    Ok(classify_pair(m.cod(), &a, &b)? == PairClass::Gap)
}
