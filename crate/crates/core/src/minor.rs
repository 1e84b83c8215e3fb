//! Exact minor containment with checkable witnesses.
//!
//! For a connected host, any minor model can be grown until it covers every
//! host vertex, so `H <= G` iff `V(G)` splits into `|V(H)|` connected parts
//! whose quotient contains `H` under a fixed part-to-vertex correspondence.
//! The search sweeps the host vertices in a fixed order and keeps, for the
//! processed prefix, only what the unprocessed suffix can still influence:
//! labels and connectivity classes of the frontier vertices, which target
//! edges are already realized, and which parts are opened or complete.
//! Identical summaries are merged, so the cost is governed by the frontier
//! width of the ordering rather than by the number of partitions.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, VertexLabel};
use crate::iso::automorphisms;
use crate::transform::{petersen_closure, FamilyMember};

/// Hosts are handled as 64-bit vertex masks after reduction.
pub const HOST_ORDER_LIMIT: usize = 64;
/// Targets are limited by the part and edge bitmasks.
pub const TARGET_ORDER_LIMIT: usize = 32;
pub const TARGET_SIZE_LIMIT: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MinorError {
    #[error("search exceeded the budget of {budget} states")]
    BudgetExceeded { budget: u64 },
    #[error("graph too large for the minor engine: {0}")]
    TooLarge(String),
}

/// Branch sets proving that a target is a minor of a host.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinorWitness {
    pub branch_sets: BTreeMap<VertexLabel, BTreeSet<VertexLabel>>,
}

/// Search limits. The budget counts summary states created.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchConfig {
    pub budget: u64,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig { budget: 50_000_000 }
    }
}

/// Independent check of the three branch-set conditions.
pub fn verify_witness(g: &Graph, h: &Graph, w: &MinorWitness) -> bool {
    if w.branch_sets.len() != h.order() || h.labels().iter().any(|x| !w.branch_sets.contains_key(x)) {
        return false;
    }
    let mut owner: HashMap<&VertexLabel, &VertexLabel> = HashMap::new();
    for (x, set) in &w.branch_sets {
        if set.is_empty() {
            return false;
        }
        for v in set {
            if !g.contains(v) || owner.insert(v, x).is_some() {
                return false;
            }
        }
        let idx: Vec<usize> = set.iter().map(|v| g.index_of(v).unwrap()).collect();
        if !g.induced_by_indices(&{
            let mut s = idx.clone();
            s.sort_unstable();
            s
        })
        .is_connected()
        {
            return false;
        }
    }
    h.edges().iter().all(|(x, y)| {
        w.branch_sets[x].iter().any(|u| {
            g.neighbors(u)
                .expect("member of g")
                .iter()
                .any(|v| owner.get(v) == Some(&y))
        })
    })
}

/// Searches for `h` as a minor of `g` with the default budget.
pub fn has_minor(g: &Graph, h: &Graph) -> Result<Option<MinorWitness>, MinorError> {
    has_minor_with(g, h, SearchConfig::default())
}

pub fn has_minor_with(
    g: &Graph,
    h: &Graph,
    config: SearchConfig,
) -> Result<Option<MinorWitness>, MinorError> {
    if h.order() > TARGET_ORDER_LIMIT || h.size() > TARGET_SIZE_LIMIT {
        return Err(MinorError::TooLarge(format!(
            "target with {} vertices and {} edges",
            h.order(),
            h.size()
        )));
    }
    if h.order() == 0 {
        return Ok(Some(MinorWitness {
            branch_sets: BTreeMap::new(),
        }));
    }
    if h.order() > g.order() || h.size() > g.size() {
        return Ok(None);
    }
    let min_degree = h.degrees().into_iter().min().unwrap_or(0);
    let reduced = Reduced::new(g, min_degree);
    if h.order() > reduced.order() || h.size() > reduced.size() {
        return Ok(None);
    }
    if reduced.order() > HOST_ORDER_LIMIT {
        return Err(MinorError::TooLarge(format!(
            "host with {} vertices after reduction",
            reduced.order()
        )));
    }
    let target = Target::new(h);
    let mut budget = Budget {
        left: config.budget,
        total: config.budget,
    };
    let host_comps = reduced.graph.components();
    let target_comps = h.components();
    // Distribute target components over host components; several target
    // components may share a host component.
    let mut assign = vec![0usize; target_comps.len()];
    loop {
        if let Some(found) = try_assignment(&reduced, h, &target_comps, &host_comps, &assign, &mut budget)? {
            return Ok(Some(reduced.lift(g, h, found, &target)));
        }
        let mut k = 0;
        loop {
            if k == assign.len() {
                return Ok(None);
            }
            assign[k] += 1;
            if assign[k] < host_comps.len() {
                break;
            }
            assign[k] = 0;
            k += 1;
        }
    }
}

fn try_assignment(
    reduced: &Reduced,
    h: &Graph,
    target_comps: &[Vec<usize>],
    host_comps: &[Vec<usize>],
    assign: &[usize],
    budget: &mut Budget,
) -> Result<Option<Vec<Vec<usize>>>, MinorError> {
    // Branch sets indexed by target vertex, as reduced-host indices.
    let mut sets: Vec<Vec<usize>> = vec![Vec::new(); h.order()];
    for (hc, host) in host_comps.iter().enumerate() {
        let members: Vec<usize> = (0..target_comps.len())
            .filter(|&k| assign[k] == hc)
            .flat_map(|k| target_comps[k].iter().copied())
            .collect();
        if members.is_empty() {
            continue;
        }
        let mut members = members;
        members.sort_unstable();
        let sub_h = h.induced_by_indices(&members);
        let sub_g = reduced.graph.induced_by_indices(host);
        if sub_h.order() > sub_g.order() || sub_h.size() > sub_g.size() {
            return Ok(None);
        }
        let target = Target::new(&sub_h);
        match FrontierSearch::new(&sub_g, &target).run(budget)? {
            None => return Ok(None),
            Some(parts) => {
                for (local_h, part) in parts.into_iter().enumerate() {
                    sets[members[local_h]] = part.into_iter().map(|v| host[v]).collect();
                }
            }
        }
    }
    Ok(Some(sets))
}

struct Budget {
    left: u64,
    total: u64,
}

impl Budget {
    fn spend(&mut self, n: u64) -> Result<(), MinorError> {
        if self.left < n {
            return Err(MinorError::BudgetExceeded { budget: self.total });
        }
        self.left -= n;
        Ok(())
    }
}

/// Host after degree reductions that cannot destroy a model of a target
/// with the given minimum degree. Each surviving vertex remembers the
/// original vertices folded into it.
struct Reduced {
    graph: Graph,
    /// For each reduced vertex, original indices merged into it.
    origin: Vec<Vec<usize>>,
}

impl Reduced {
    fn new(g: &Graph, min_degree: usize) -> Self {
        let n = g.order();
        let mut adj: Vec<BTreeSet<usize>> = g
            .adjacency()
            .iter()
            .map(|l| l.iter().copied().collect())
            .collect();
        let mut alive = vec![true; n];
        let mut origin: Vec<Vec<usize>> = (0..n).map(|v| vec![v]).collect();
        loop {
            let mut changed = false;
            for v in 0..n {
                if !alive[v] {
                    continue;
                }
                let d = adj[v].len();
                if min_degree >= 2 && d <= 1 {
                    // A model never needs a vertex of degree at most one.
                    for u in std::mem::take(&mut adj[v]) {
                        adj[u].remove(&v);
                    }
                    alive[v] = false;
                    changed = true;
                } else if min_degree >= 3 && d == 2 {
                    // Suppress: fold v into its smaller neighbor.
                    let nb: Vec<usize> = adj[v].iter().copied().collect();
                    let (keep, other) = (nb[0], nb[1]);
                    adj[keep].remove(&v);
                    adj[other].remove(&v);
                    adj[v].clear();
                    adj[keep].insert(other);
                    adj[other].insert(keep);
                    let folded = std::mem::take(&mut origin[v]);
                    origin[keep].extend(folded);
                    alive[v] = false;
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        let kept: Vec<usize> = (0..n).filter(|&v| alive[v]).collect();
        let mut remap = vec![usize::MAX; n];
        for (i, &v) in kept.iter().enumerate() {
            remap[v] = i;
        }
        let labels = kept.iter().map(|&v| g.label(v).clone()).collect();
        let new_adj = kept
            .iter()
            .map(|&v| adj[v].iter().map(|&u| remap[u]).collect())
            .collect();
        Reduced {
            graph: Graph::from_parts(labels, new_adj),
            origin: kept.iter().map(|&v| origin[v].clone()).collect(),
        }
    }

    fn order(&self) -> usize {
        self.graph.order()
    }

    fn size(&self) -> usize {
        self.graph.size()
    }

    /// Maps reduced branch sets back to the original host.
    fn lift(&self, g: &Graph, h: &Graph, sets: Vec<Vec<usize>>, _target: &Target) -> MinorWitness {
        let branch_sets = sets
            .into_iter()
            .enumerate()
            .map(|(x, set)| {
                let originals: BTreeSet<VertexLabel> = set
                    .into_iter()
                    .flat_map(|r| self.origin[r].iter().map(|&v| g.label(v).clone()))
                    .collect();
                (h.label(x).clone(), originals)
            })
            .collect();
        MinorWitness { branch_sets }
    }
}

/// Target graph data in the form the search uses.
struct Target {
    p: usize,
    /// Edge id for each adjacent pair, `None` otherwise.
    edge_id: Vec<Vec<Option<usize>>>,
    /// Bitmask of edge ids incident to each part.
    incident: Vec<u64>,
    all_edges: u64,
    automorphisms: Vec<Vec<usize>>,
}

impl Target {
    fn new(h: &Graph) -> Self {
        let p = h.order();
        let mut edge_id = vec![vec![None; p]; p];
        let mut incident = vec![0u64; p];
        for (k, (a, b)) in h.edge_indices().into_iter().enumerate() {
            edge_id[a][b] = Some(k);
            edge_id[b][a] = Some(k);
            incident[a] |= 1 << k;
            incident[b] |= 1 << k;
        }
        let all_edges = if h.size() == 64 { u64::MAX } else { (1u64 << h.size()) - 1 };
        let automorphisms = automorphisms(h).unwrap_or_else(|_| vec![(0..p).collect()]);
        Target {
            p,
            edge_id,
            incident,
            all_edges,
            automorphisms,
        }
    }

    /// Parts that represent distinct orbits of unopened parts under the
    /// automorphisms fixing every opened part.
    fn opening_choices(&self, opened: u32) -> u32 {
        let stabilizer: Vec<&Vec<usize>> = self
            .automorphisms
            .iter()
            .filter(|a| (0..self.p).all(|x| opened >> x & 1 == 0 || a[x] == x))
            .collect();
        let mut reps = 0u32;
        let mut covered = opened;
        for x in 0..self.p {
            if covered >> x & 1 == 1 {
                continue;
            }
            reps |= 1 << x;
            for a in &stabilizer {
                covered |= 1 << a[x];
            }
        }
        reps
    }
}

/// One step of the sweep: which frontier slots survive and whether the new
/// vertex joins the frontier.
struct Step {
    vertex: usize,
    /// For each slot of the new frontier, its source: `Some(i)` for old slot
    /// `i`, `None` for the new vertex.
    after: Vec<Option<usize>>,
    /// Old slots holding processed neighbors of the new vertex.
    neighbor_slots: Vec<usize>,
}

fn sweep_order(g: &Graph) -> Vec<usize> {
    let n = g.order();
    let mut best: Option<(usize, Vec<usize>)> = None;
    for start in 0..n {
        let mut done = vec![false; n];
        let mut left: Vec<usize> = g.degrees();
        let mut order = Vec::with_capacity(n);
        let mut width = 0usize;
        let mut frontier = 0usize;
        let mut current = start;
        loop {
            done[current] = true;
            order.push(current);
            for &u in g.neighbor_indices(current) {
                left[u] -= 1;
                if done[u] && left[u] == 0 {
                    frontier -= 1;
                }
            }
            if left[current] > 0 {
                frontier += 1;
            }
            width = width.max(frontier);
            if order.len() == n {
                break;
            }
            // Next: the vertex that closes the most frontier slots, then the
            // one with most processed neighbors, then smallest index.
            let mut pick: Option<(i64, usize, usize)> = None;
            for v in 0..n {
                if done[v] {
                    continue;
                }
                let processed = g.neighbor_indices(v).iter().filter(|&&u| done[u]).count();
                let closes = g
                    .neighbor_indices(v)
                    .iter()
                    .filter(|&&u| done[u] && left[u] == 1)
                    .count() as i64;
                let opens = i64::from(left[v] > processed);
                let score = closes - opens;
                let key = (score, processed, usize::MAX - v);
                if pick.is_none_or(|(s, p, i)| key > (s, p, i)) {
                    pick = Some(key);
                }
            }
            current = usize::MAX - pick.unwrap().2;
        }
        if best.as_ref().is_none_or(|(w, _)| width < *w) {
            best = Some((width, order));
        }
    }
    best.map(|(_, o)| o).unwrap_or_default()
}

fn plan_steps(g: &Graph, order: &[usize]) -> Vec<Step> {
    let n = g.order();
    let mut position = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }
    let mut frontier: Vec<usize> = Vec::new();
    let mut steps = Vec::with_capacity(n);
    for (t, &v) in order.iter().enumerate() {
        let still_open = |u: usize| {
            g.neighbor_indices(u)
                .iter()
                .any(|&w| position[w] > t)
        };
        let neighbor_slots: Vec<usize> = frontier
            .iter()
            .enumerate()
            .filter(|&(_, &u)| g.has_edge_idx(u, v))
            .map(|(i, _)| i)
            .collect();
        let mut after: Vec<Option<usize>> = frontier
            .iter()
            .enumerate()
            .filter(|&(_, &u)| still_open(u))
            .map(|(i, _)| Some(i))
            .collect();
        if still_open(v) {
            after.push(None);
        }
        let next: Vec<usize> = after
            .iter()
            .map(|s| s.map_or(v, |i| frontier[i]))
            .collect();
        steps.push(Step {
            vertex: v,
            after,
            neighbor_slots,
        });
        frontier = next;
    }
    steps
}

/// Summary of a processed prefix. `labels[i]` / `classes[i]` describe
/// frontier slot `i`; classes are numbered in first-appearance order.
#[derive(Clone, PartialEq, Eq, Hash)]
struct Summary {
    labels: Vec<u8>,
    classes: Vec<u8>,
    realized: u64,
    opened: u32,
    finished: u32,
}

struct Node {
    summary: Summary,
    parent: usize,
    label: u8,
}

struct FrontierSearch<'a> {
    g: &'a Graph,
    target: &'a Target,
    steps: Vec<Step>,
    choices: HashMap<u32, u32>,
}

impl<'a> FrontierSearch<'a> {
    fn new(g: &'a Graph, target: &'a Target) -> Self {
        let order = sweep_order(g);
        let steps = plan_steps(g, &order);
        FrontierSearch {
            g,
            target,
            steps,
            choices: HashMap::new(),
        }
    }

    /// Returns the parts (host indices per target vertex) of a model.
    fn run(&mut self, budget: &mut Budget) -> Result<Option<Vec<Vec<usize>>>, MinorError> {
        let p = self.target.p;
        let n = self.g.order();
        let mut layers: Vec<Vec<Node>> = Vec::with_capacity(n + 1);
        layers.push(vec![Node {
            summary: Summary {
                labels: Vec::new(),
                classes: Vec::new(),
                realized: 0,
                opened: 0,
                finished: 0,
            },
            parent: usize::MAX,
            label: 0,
        }]);
        for t in 0..n {
            let remaining_after = (n - t - 1) as u32;
            let mut next: Vec<Node> = Vec::new();
            let mut index: HashMap<Summary, usize> = HashMap::new();
            let prev = &layers[t];
            for (pi, node) in prev.iter().enumerate() {
                let s = &node.summary;
                let fresh_ok = self.opening_choices(s.opened);
                for c in 0..p {
                    let bit = 1u32 << c;
                    if s.finished & bit != 0 {
                        continue;
                    }
                    if s.opened & bit == 0 {
                        if fresh_ok & bit == 0 {
                            continue;
                        }
                        let unopened_after = p as u32 - s.opened.count_ones() - 1;
                        if unopened_after > remaining_after {
                            continue;
                        }
                    } else {
                        let unopened = p as u32 - s.opened.count_ones();
                        if unopened > remaining_after {
                            continue;
                        }
                    }
                    if let Some(succ) = self.advance(t, s, c as u8) {
                        budget.spend(1)?;
                        match index.get(&succ) {
                            Some(_) => {}
                            None => {
                                index.insert(succ.clone(), next.len());
                                next.push(Node {
                                    summary: succ,
                                    parent: pi,
                                    label: c as u8,
                                });
                            }
                        }
                    }
                }
            }
            if next.is_empty() {
                return Ok(None);
            }
            layers.push(next);
        }
        let all_parts = if p == 32 { u32::MAX } else { (1u32 << p) - 1 };
        let last = &layers[n];
        let Some(final_idx) = last.iter().position(|node| {
            node.summary.finished == all_parts && node.summary.realized == self.target.all_edges
        }) else {
            return Ok(None);
        };
        let mut parts = vec![Vec::new(); p];
        let mut idx = final_idx;
        for t in (0..n).rev() {
            let node = &layers[t + 1][idx];
            parts[node.label as usize].push(self.steps[t].vertex);
            idx = node.parent;
        }
        for part in &mut parts {
            part.sort_unstable();
        }
        Ok(Some(parts))
    }

    fn opening_choices(&mut self, opened: u32) -> u32 {
        if let Some(&c) = self.choices.get(&opened) {
            return c;
        }
        let c = self.target.opening_choices(opened);
        self.choices.insert(opened, c);
        c
    }

    /// Successor summary after giving the step's vertex label `c`, or `None`
    /// when the partial partition can no longer be completed.
    fn advance(&self, t: usize, s: &Summary, c: u8) -> Option<Summary> {
        let step = &self.steps[t];
        let target = self.target;
        let mut realized = s.realized;
        // Classes of the old frontier plus one for the new vertex.
        let new_class = s.classes.iter().copied().max().map_or(0, |m| m + 1);
        let mut class: Vec<u8> = s.classes.clone();
        class.push(new_class);
        let mut merge_into = new_class;
        for &slot in &step.neighbor_slots {
            let d = s.labels[slot];
            if d == c {
                merge_into = merge_into.min(class[slot]);
            } else if let Some(e) = target.edge_id[c as usize][d as usize] {
                realized |= 1 << e;
            }
        }
        // Merge every class of a same-label neighbor with the new vertex.
        let mut merged: Vec<u8> = Vec::new();
        for &slot in &step.neighbor_slots {
            if s.labels[slot] == c {
                merged.push(class[slot]);
            }
        }
        merged.push(new_class);
        for x in class.iter_mut() {
            if merged.contains(x) {
                *x = merge_into;
            }
        }
        let mut labels: Vec<u8> = s.labels.clone();
        labels.push(c);
        // Which classes survive on the new frontier.
        let old_len = s.labels.len();
        let slot_of = |src: Option<usize>| src.unwrap_or(old_len);
        let mut surviving: Vec<u8> = step.after.iter().map(|&src| class[slot_of(src)]).collect();
        let mut finished = s.finished;
        let opened = s.opened | 1 << c;
        // Classes that vanish from the frontier are complete; a part may only
        // complete if it has no other class left anywhere.
        let mut all_classes: Vec<(u8, u8)> = class
            .iter()
            .zip(&labels)
            .map(|(&k, &l)| (k, l))
            .collect();
        all_classes.sort_unstable();
        all_classes.dedup();
        for &(k, l) in &all_classes {
            if surviving.contains(&k) {
                continue;
            }
            let others_alive = all_classes
                .iter()
                .any(|&(k2, l2)| l2 == l && k2 != k && surviving.contains(&k2));
            let others_closing = all_classes
                .iter()
                .any(|&(k2, l2)| l2 == l && k2 != k && !surviving.contains(&k2));
            if others_alive || others_closing || finished >> l & 1 == 1 {
                return None;
            }
            finished |= 1 << l;
        }
        // A complete part must already have all its target edges.
        for x in 0..target.p {
            if finished >> x & 1 == 1 && target.incident[x] & !realized != 0 {
                return None;
            }
        }
        let new_labels: Vec<u8> = step.after.iter().map(|&src| labels[slot_of(src)]).collect();
        // Renumber classes in first-appearance order.
        let mut renumber: Vec<(u8, u8)> = Vec::new();
        for k in surviving.iter_mut() {
            let r = match renumber.iter().find(|(old, _)| old == k) {
                Some(&(_, r)) => r,
                None => {
                    let r = renumber.len() as u8;
                    renumber.push((*k, r));
                    r
                }
            };
            *k = r;
        }
        Some(Summary {
            labels: new_labels,
            classes: surviving,
            realized,
            opened,
            finished,
        })
    }
}

/// Outcome of testing a host against the Petersen family.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExclusionReport {
    pub excluded: bool,
    pub offending_member: Option<OffendingMember>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OffendingMember {
    pub member_id: usize,
    pub witness: MinorWitness,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("minor search against Petersen-family member {member_id} exceeded its budget")]
pub struct ExclusionError {
    pub member_id: usize,
    pub source: MinorError,
}

/// The seven Petersen-family graphs, computed once.
pub fn petersen_family() -> &'static [FamilyMember] {
    static FAMILY: std::sync::OnceLock<Vec<FamilyMember>> = std::sync::OnceLock::new();
    FAMILY.get_or_init(petersen_closure)
}

pub fn excludes_petersen_family(g: &Graph) -> Result<ExclusionReport, ExclusionError> {
    excludes_petersen_family_with(g, SearchConfig::default())
}

/// Tests every family member in id order and stops at the first minor found.
pub fn excludes_petersen_family_with(
    g: &Graph,
    config: SearchConfig,
) -> Result<ExclusionReport, ExclusionError> {
    for member in petersen_family() {
        match has_minor_with(g, &member.graph, config) {
            Ok(Some(witness)) => {
                return Ok(ExclusionReport {
                    excluded: false,
                    offending_member: Some(OffendingMember {
                        member_id: member.id,
                        witness,
                    }),
                })
            }
            Ok(None) => {}
            Err(source) => {
                return Err(ExclusionError {
                    member_id: member.id,
                    source,
                })
            }
        }
    }
    Ok(ExclusionReport {
        excluded: true,
        offending_member: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    fn assert_minor(g: &Graph, h: &Graph) {
        let w = has_minor(g, h).unwrap().expect("minor expected");
        assert!(verify_witness(g, h, &w), "bad witness {w:?}");
    }

    #[test]
    fn k6_in_k7() {
        assert_minor(&complete(7), &complete(6));
    }

    #[test]
    fn no_k5_in_cube() {
        assert!(has_minor(&cube(), &complete(5)).unwrap().is_none());
    }

    #[test]
    fn petersen_not_in_k6() {
        assert!(has_minor(&complete(6), &petersen()).unwrap().is_none());
    }

    #[test]
    fn k4_in_cube_and_k5_in_petersen() {
        assert_minor(&cube(), &complete(4));
        assert_minor(&petersen(), &complete(5));
        assert_minor(&petersen(), &complete_bipartite(3, 3));
        assert!(has_minor(&petersen(), &complete(6)).unwrap().is_none());
    }

    #[test]
    fn reflexive_on_small_graphs() {
        for g in [petersen(), cube(), complete(5), cycle(5), path(4)] {
            assert_minor(&g, &g);
        }
    }

    #[test]
    fn disconnected_target_and_host() {
        let two_edges = Graph::from_index_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_minor(&path(4), &two_edges);
        assert!(has_minor(&path(3), &two_edges).unwrap().is_none());
        let host = Graph::from_index_edges(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        let k3 = complete(3);
        assert_minor(&host, &k3);
        let k3k3 = host.clone();
        assert_minor(&host, &k3k3);
    }

    #[test]
    fn witness_checker_rejects_bad_witnesses() {
        let g = cycle(4);
        let h = complete(3);
        let mut good = has_minor(&g, &h).unwrap().unwrap();
        assert!(verify_witness(&g, &h, &good));
        let first = h.label(0).clone();
        let second = h.label(1).clone();
        let stolen = good.branch_sets[&second].iter().next().unwrap().clone();
        good.branch_sets.get_mut(&first).unwrap().insert(stolen);
        assert!(!verify_witness(&g, &h, &good));

        let mut apart = MinorWitness {
            branch_sets: BTreeMap::new(),
        };
        for (x, v) in [("1", "1"), ("2", "2"), ("3", "4")] {
            apart
                .branch_sets
                .insert(VertexLabel::from(x), BTreeSet::from([VertexLabel::from(v)]));
        }
        // 2 and 4 are not adjacent in C4.
        assert!(!verify_witness(&g, &h, &apart));
    }

    #[test]
    fn budget_exhaustion_is_an_error() {
        let r = has_minor_with(&petersen(), &complete(5), SearchConfig { budget: 3 });
        assert!(matches!(r, Err(MinorError::BudgetExceeded { budget: 3 })));
    }

    #[test]
    fn k6_is_not_excluded() {
        let report = excludes_petersen_family(&complete(6)).unwrap();
        assert!(!report.excluded);
        assert_eq!(report.offending_member.unwrap().member_id, 0);
    }
}
