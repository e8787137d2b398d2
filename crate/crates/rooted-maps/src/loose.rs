//! Mutable map representation used during surgery. Darts keep arbitrary
//! labels while vertices are cut apart and edges re-paired; [`Loose::pack`]
//! renumbers a component back into a dense [`RootedMap`].

use std::collections::{BTreeMap, BTreeSet};

use crate::map::{CornerSlot, Dart, RootedMap};

/// Mutable map under surgery. Darts carry arbitrary labels; `succ` is the
/// rotation and `mate` the edge pairing (no longer necessarily `d ^ 1`).
#[derive(Clone, Debug, Default)]
pub(crate) struct Loose {
    pub(crate) succ: BTreeMap<Dart, Dart>,
    pub(crate) mate: BTreeMap<Dart, Dart>,
}

impl Loose {
    pub(crate) fn of(map: &RootedMap) -> Self {
        let mut loose = Loose::default();
        for d in 0..map.n_darts() {
            loose.succ.insert(d, map.sigma(d));
            loose.mate.insert(d, map.alpha(d));
        }
        loose
    }

    /// Loads `map` with every dart shifted by `offset`.
    pub(crate) fn of_shifted(map: &RootedMap, offset: usize) -> Self {
        let mut loose = Loose::default();
        for d in 0..map.n_darts() {
            loose.succ.insert(d + offset, map.sigma(d) + offset);
            loose.mate.insert(d + offset, map.alpha(d) + offset);
        }
        loose
    }

    pub(crate) fn absorb(&mut self, other: Loose) {
        self.succ.extend(other.succ);
        self.mate.extend(other.mate);
    }

    /// Installs `cycle` as a vertex rotation (empty cycles vanish).
    pub(crate) fn set_cycle(&mut self, cycle: &[Dart]) {
        for i in 0..cycle.len() {
            self.succ.insert(cycle[i], cycle[(i + 1) % cycle.len()]);
        }
    }

    pub(crate) fn pair(&mut self, a: Dart, b: Dart) {
        self.mate.insert(a, b);
        self.mate.insert(b, a);
    }

    pub(crate) fn remove_dart(&mut self, d: Dart) {
        self.succ.remove(&d);
        self.mate.remove(&d);
    }


    pub(crate) fn component(&self, from: Dart) -> BTreeSet<Dart> {
        let mut seen = BTreeSet::new();
        let mut stack = vec![from];
        while let Some(d) = stack.pop() {
            if !seen.insert(d) {
                continue;
            }
            stack.push(self.succ[&d]);
            stack.push(self.mate[&d]);
        }
        seen
    }

    /// Renumbers the component of `root` into a dense rooted map, allocating
    /// edges in first-visit order. Returns the old-to-new dart mapping.
    pub(crate) fn pack(&self, root: Dart) -> (RootedMap, BTreeMap<Dart, Dart>) {
        let mut label: BTreeMap<Dart, Dart> = BTreeMap::new();
        let mut old_of: Vec<Dart> = Vec::new();
        let assign = |d: Dart, label: &mut BTreeMap<Dart, Dart>, old_of: &mut Vec<Dart>| {
            if !label.contains_key(&d) {
                let mate = self.mate[&d];
                assert_ne!(d, mate, "edge pairing must be fixed-point free");
                label.insert(d, old_of.len());
                old_of.push(d);
                label.insert(mate, old_of.len());
                old_of.push(mate);
            }
        };
        assign(root, &mut label, &mut old_of);
        let mut pos = 0;
        while pos < old_of.len() {
            let d = old_of[pos];
            assign(self.succ[&d], &mut label, &mut old_of);
            pos += 1;
        }
        let sigma: Vec<Dart> = old_of.iter().map(|d| label[&self.succ[d]]).collect();
        (RootedMap::from_parts(sigma, Some(0)), label)
    }

    /// Packs an empty component (the vertex map).
    pub(crate) fn pack_empty() -> RootedMap {
        RootedMap::vertex_map()
    }
}



pub(crate) fn map_slot(slot: CornerSlot, mapping: &BTreeMap<Dart, Dart>) -> CornerSlot {
    match slot {
        CornerSlot::Before(d) => CornerSlot::Before(mapping[&d]),
        CornerSlot::RootLeft => CornerSlot::RootLeft,
    }
}
