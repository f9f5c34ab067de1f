//! Isomorphism testing by invariant screening and generator-image backtracking.

use std::collections::HashMap;

use crate::error::{GroupError, Result};

use super::{ElemId, FiniteGroup};

pub const DEFAULT_ISOMORPHISM_CAP: usize = 5000;

/// Per-element invariant preserved by isomorphisms: (element order, class size).
type Key = (u32, usize);

fn element_keys(g: &FiniteGroup) -> Vec<Key> {
    let orders = g.element_orders();
    let cc = g.conjugacy_classes();
    g.elements()
        .map(|x| (orders[x as usize], cc.class_of(x).len()))
        .collect()
}

fn key_histogram(keys: &[Key]) -> HashMap<Key, usize> {
    let mut h = HashMap::new();
    for &k in keys {
        *h.entry(k).or_default() += 1;
    }
    h
}

pub fn isomorphic(g: &FiniteGroup, h: &FiniteGroup) -> Result<bool> {
    isomorphic_with_cap(g, h, DEFAULT_ISOMORPHISM_CAP)
}

pub fn isomorphic_with_cap(g: &FiniteGroup, h: &FiniteGroup, cap: usize) -> Result<bool> {
    Ok(find_isomorphism(g, h, cap)?.is_some())
}

/// An isomorphism `G -> H` as an image table indexed by element id of `G`.
pub fn find_isomorphism(g: &FiniteGroup, h: &FiniteGroup, cap: usize) -> Result<Option<Vec<ElemId>>> {
    if g.order() != h.order() {
        return Ok(None);
    }
    if g.order() > cap {
        return Err(GroupError::CapExceeded {
            what: "isomorphism test",
            size: g.order(),
            cap,
        });
    }
    if g.centre().order() != h.centre().order()
        || g.derived_subgroup().order() != h.derived_subgroup().order()
    {
        return Ok(None);
    }
    let gk = element_keys(g);
    let hk = element_keys(h);
    let ghist = key_histogram(&gk);
    if ghist != key_histogram(&hk) {
        return Ok(None);
    }
    let gens = search_generators(g, &gk, &ghist);

    let h_classes = h.conjugacy_classes();
    let mut candidates: Vec<Vec<ElemId>> = Vec::with_capacity(gens.len());
    for (i, &x) in gens.iter().enumerate() {
        let key = gk[x as usize];
        let c: Vec<ElemId> = if i == 0 {
            // images of the first generator only matter up to inner automorphisms of H
            (0..h_classes.len())
                .map(|c| h_classes.representative(c))
                .filter(|&y| hk[y as usize] == key)
                .collect()
        } else {
            h.elements().filter(|&y| hk[y as usize] == key).collect()
        };
        candidates.push(c);
    }

    let mut images = Vec::with_capacity(gens.len());
    Ok(backtrack(g, h, &gens, &candidates, &mut images))
}

/// Generators chosen so that early ones have rare invariants, which keeps the
/// candidate lists short.
fn search_generators(g: &FiniteGroup, keys: &[Key], hist: &HashMap<Key, usize>) -> Vec<ElemId> {
    let n = g.order();
    if n == 1 {
        return Vec::new();
    }
    let mut by_rarity: Vec<ElemId> = g.elements().skip(1).collect();
    by_rarity.sort_by_key(|&x| {
        let k = keys[x as usize];
        (hist[&k], std::cmp::Reverse(k.0), x)
    });
    let cc = g.conjugacy_classes();
    let first = *by_rarity
        .iter()
        .find(|&&x| cc.representative(cc.class_index(x)) == x)
        .expect("nontrivial group has a nontrivial class");
    let mut gens = vec![first];
    let mut current = g.closure(&gens).order();
    while current < n {
        let mut best: Option<(usize, ElemId)> = None;
        let sub = g.closure(&gens);
        for &y in &by_rarity {
            if sub.contains(y) {
                continue;
            }
            let mut trial = gens.clone();
            trial.push(y);
            let size = g.closure(&trial).order();
            if best.is_none_or(|(s, _)| size > s) {
                best = Some((size, y));
            }
            if size == n {
                break;
            }
        }
        let (size, y) = best.expect("proper subgroup leaves candidates");
        gens.push(y);
        current = size;
    }
    gens
}

fn backtrack(
    g: &FiniteGroup,
    h: &FiniteGroup,
    gens: &[ElemId],
    candidates: &[Vec<ElemId>],
    images: &mut Vec<ElemId>,
) -> Option<Vec<ElemId>> {
    let depth = images.len();
    if depth == gens.len() {
        return extend_map(g, h, gens, images).filter(|m| m.iter().all(|&v| v != ElemId::MAX));
    }
    for &y in &candidates[depth] {
        images.push(y);
        if extend_map(g, h, &gens[..=depth], images).is_some() {
            if let Some(m) = backtrack(g, h, gens, candidates, images) {
                return Some(m);
            }
        }
        images.pop();
    }
    None
}

/// Extends `gens[i] -> images[i]` along the Cayley graph of the generated
/// subgroup, checking every edge for consistency and the map for injectivity.
fn extend_map(
    g: &FiniteGroup,
    h: &FiniteGroup,
    gens: &[ElemId],
    images: &[ElemId],
) -> Option<Vec<ElemId>> {
    let mut map = vec![ElemId::MAX; g.order()];
    let mut back = vec![ElemId::MAX; h.order()];
    map[0] = 0;
    back[0] = 0;
    let mut list = vec![0];
    let mut i = 0;
    while i < list.len() {
        let e = list[i];
        let fe = map[e as usize];
        for (&x, &y) in gens.iter().zip(images) {
            let target = g.mul(e, x);
            let image = h.mul(fe, y);
            let cur = map[target as usize];
            if cur == ElemId::MAX {
                if back[image as usize] != ElemId::MAX {
                    return None;
                }
                map[target as usize] = image;
                back[image as usize] = target;
                list.push(target);
            } else if cur != image {
                return None;
            }
        }
        i += 1;
    }
    Some(map)
}
