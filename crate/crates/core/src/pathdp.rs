//! Partition-matching dynamic program over a nice tree decomposition, shared by
//! the Hamiltonian cycle, Hamiltonian path and weighted long path solvers.
//!
//! Each edge is decided at the forget node of whichever endpoint leaves the
//! decomposition first; the other endpoint is then still in the bag.

use alloc::vec::Vec;

use hashbrown::HashMap;

use crate::certificate::Certificate;
use crate::graph::Graph;
use crate::treewidth::{NiceKind, TreeDecomposition};

#[derive(Clone, Copy, Debug)]
pub(crate) enum Mode<'a> {
    Cycle,
    HamPath,
    /// Maximizes total vertex weight of a simple path.
    LongPath { weights: &'a [u64] },
}

impl Mode<'_> {
    fn is_path(&self) -> bool {
        !matches!(self, Mode::Cycle)
    }

    fn spanning(&self) -> bool {
        !matches!(self, Mode::LongPath { .. })
    }

    fn weight(&self, v: usize) -> u64 {
        match self {
            Mode::LongPath { weights } => weights[v],
            _ => 0,
        }
    }
}

/// Degree of a bag vertex in the partial solution, with the far end of its fragment.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
enum Slot {
    Zero,
    /// Fragment end whose other end is the given bag vertex.
    One(u32),
    /// Fragment end whose other end was forgotten as a final path endpoint.
    OneFinal,
    Two,
}

impl Slot {
    fn degree(self) -> u8 {
        match self {
            Slot::Zero => 0,
            Slot::One(_) | Slot::OneFinal => 1,
            Slot::Two => 2,
        }
    }

    fn is_open(self) -> bool {
        matches!(self, Slot::One(_) | Slot::OneFinal)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct Key {
    slots: Vec<Slot>,
    /// Forgotten vertices of degree one.
    ends: u8,
    /// The solution is closed: a cycle, or a path with both ends forgotten.
    done: bool,
}

#[derive(Clone, Debug)]
enum Back {
    Leaf,
    Intro(u32),
    Forget { child: u32, edges: [Option<(u32, u32)>; 2], isolated: Option<u32> },
    Join(u32, u32),
}

struct Entry {
    key: Key,
    value: u64,
    back: Back,
}

/// A join examines at most this many compatible pairs per allowed table entry.
const JOIN_PAIRS_PER_STATE: usize = 32;

struct Table {
    entries: Vec<Entry>,
    index: HashMap<Key, usize>,
    /// New keys beyond this many entries are dropped and flag `overflow`.
    limit: usize,
    overflow: bool,
}

impl Table {
    fn new(limit: usize) -> Self {
        Table { entries: Vec::new(), index: HashMap::new(), limit, overflow: false }
    }

    fn offer(&mut self, key: Key, value: u64, back: Back) {
        match self.index.get(&key) {
            Some(&i) => {
                if value > self.entries[i].value {
                    self.entries[i].value = value;
                    self.entries[i].back = back;
                }
            }
            None if self.entries.len() >= self.limit => self.overflow = true,
            None => {
                self.index.insert(key.clone(), self.entries.len());
                self.entries.push(Entry { key, value, back });
            }
        }
    }
}

/// Best solution of the requested kind in `h`, with its value (total weight for
/// long paths, 0 otherwise).
pub(crate) fn solve(h: &Graph, td: &TreeDecomposition, mode: Mode<'_>) -> Option<(Certificate, u64)> {
    solve_capped(h, td, mode, usize::MAX).unwrap_or(None)
}

/// [`solve`] with at most `max_states` entries per table; `Err` carries the
/// size of the first table that hit the cap.
pub(crate) fn solve_capped(
    h: &Graph,
    td: &TreeDecomposition,
    mode: Mode<'_>,
    max_states: usize,
) -> Result<Option<(Certificate, u64)>, usize> {
    let n = h.n();
    if n == 0 {
        return Ok(None);
    }
    match mode {
        Mode::Cycle if n < 3 => return Ok(None),
        Mode::HamPath if n == 1 => return Ok(Some((Certificate::path(alloc::vec![0]), 0))),
        _ => {}
    }
    let nice = td.to_nice();
    let mut tables: Vec<Table> = Vec::with_capacity(nice.nodes.len());
    for node in &nice.nodes {
        let mut table = Table::new(max_states);
        match node.kind {
            NiceKind::Leaf => {
                table.offer(Key { slots: Vec::new(), ends: 0, done: false }, 0, Back::Leaf);
            }
            NiceKind::Introduce { child, v } => {
                let pos = node.bag.binary_search(&v).expect("introduced vertex in bag");
                for (i, e) in tables[child].entries.iter().enumerate() {
                    let mut slots = e.key.slots.clone();
                    slots.insert(pos, Slot::Zero);
                    table.offer(Key { slots, ends: e.key.ends, done: e.key.done }, e.value, Back::Intro(i as u32));
                }
            }
            NiceKind::Forget { child, v } => {
                let cbag = &nice.nodes[child].bag;
                forget(h, mode, cbag, v, &tables[child], &mut table);
            }
            NiceKind::Join { left, right } => {
                join(mode, &node.bag, &tables[left], &tables[right], &mut table);
            }
        }
        if table.overflow {
            return Err(table.entries.len());
        }
        tables.push(table);
    }
    let root = nice.root();
    let best = tables[root]
        .entries
        .iter()
        .enumerate()
        .filter(|(_, e)| e.key.done)
        .max_by_key(|(i, e)| (e.value, core::cmp::Reverse(*i)));
    let Some((idx, entry)) = best else { return Ok(None) };
    let value = entry.value;
    Ok(Some((rebuild(&nice, &tables, root, idx, mode, n), value)))
}

fn forget(h: &Graph, mode: Mode<'_>, cbag: &[usize], u: usize, child: &Table, out: &mut Table) {
    let pu = cbag.binary_search(&u).expect("forgotten vertex in child bag");
    let pbag: Vec<usize> = cbag.iter().copied().filter(|&x| x != u).collect();
    let mut out = |key: Key, value: u64, back: Back| {
        let (key, value) = settle(mode, &pbag, key, value);
        out.offer(key, value, back);
    };
    let nbrs: Vec<usize> = (0..cbag.len()).filter(|&i| i != pu && h.has_edge(u, cbag[i])).collect();
    for (ci, e) in child.entries.iter().enumerate() {
        let room = 2 - e.key.slots[pu].degree() as usize;
        let mut choices: Vec<[Option<usize>; 2]> = alloc::vec![[None, None]];
        if room >= 1 {
            for (a, &x) in nbrs.iter().enumerate() {
                choices.push([Some(x), None]);
                if room >= 2 {
                    for &y in &nbrs[a + 1..] {
                        choices.push([Some(x), Some(y)]);
                    }
                }
            }
        }
        for choice in choices {
            let mut key = e.key.clone();
            let mut ok = true;
            for w in choice.iter().flatten() {
                if !add_edge(&mut key, cbag, pu, *w, mode) {
                    ok = false;
                    break;
                }
            }
            if !ok {
                continue;
            }
            let edges = choice.map(|c| c.map(|w| (u as u32, cbag[w] as u32)));
            let slot = key.slots.remove(pu);
            let w = mode.weight(u);
            match slot {
                Slot::Zero => {
                    if mode.spanning() {
                        continue;
                    }
                    out(key.clone(), e.value, Back::Forget { child: ci as u32, edges, isolated: None });
                    if !key.done && key.ends == 0 && !key.slots.iter().any(|s| s.is_open()) {
                        key.done = true;
                        out(key, e.value + w, Back::Forget { child: ci as u32, edges, isolated: Some(u as u32) });
                    }
                }
                Slot::One(p) => {
                    if !mode.is_path() || key.ends >= 2 {
                        continue;
                    }
                    key.ends += 1;
                    let pp = key_pos(cbag, pu, p);
                    key.slots[pp] = Slot::OneFinal;
                    out(key, e.value + w, Back::Forget { child: ci as u32, edges, isolated: None });
                }
                Slot::OneFinal => {
                    if !mode.is_path() || key.done || key.ends >= 2 || key.slots.iter().any(|s| s.is_open()) {
                        continue;
                    }
                    key.ends += 1;
                    key.done = true;
                    out(key, e.value + w, Back::Forget { child: ci as u32, edges, isolated: None });
                }
                Slot::Two => {
                    out(key, e.value + w, Back::Forget { child: ci as u32, edges, isolated: None });
                }
            }
        }
    }
}

/// Position of vertex `p` in the bag after removing index `removed`.
fn key_pos(cbag: &[usize], removed: usize, p: u32) -> usize {
    let i = cbag.binary_search(&(p as usize)).expect("partner in bag");
    if i > removed {
        i - 1
    } else {
        i
    }
}

/// Adds edge between bag positions `a` and `b`; false if infeasible.
fn add_edge(key: &mut Key, bag: &[usize], a: usize, b: usize, mode: Mode<'_>) -> bool {
    if key.done {
        return false;
    }
    let pos = |v: u32| bag.binary_search(&(v as usize)).expect("partner in bag");
    let (av, bv) = (bag[a] as u32, bag[b] as u32);
    let closes = match (key.slots[a], key.slots[b]) {
        (Slot::Two, _) | (_, Slot::Two) => return false,
        (Slot::Zero, Slot::Zero) => {
            key.slots[a] = Slot::One(bv);
            key.slots[b] = Slot::One(av);
            false
        }
        (Slot::Zero, Slot::One(p)) => {
            key.slots[a] = Slot::One(p);
            key.slots[pos(p)] = Slot::One(av);
            key.slots[b] = Slot::Two;
            false
        }
        (Slot::One(p), Slot::Zero) => {
            key.slots[b] = Slot::One(p);
            key.slots[pos(p)] = Slot::One(bv);
            key.slots[a] = Slot::Two;
            false
        }
        (Slot::Zero, Slot::OneFinal) => {
            key.slots[a] = Slot::OneFinal;
            key.slots[b] = Slot::Two;
            false
        }
        (Slot::OneFinal, Slot::Zero) => {
            key.slots[b] = Slot::OneFinal;
            key.slots[a] = Slot::Two;
            false
        }
        (Slot::One(p), Slot::One(q)) => {
            key.slots[a] = Slot::Two;
            key.slots[b] = Slot::Two;
            if p == bv {
                if mode.is_path() {
                    return false;
                }
                true
            } else {
                key.slots[pos(p)] = Slot::One(q);
                key.slots[pos(q)] = Slot::One(p);
                false
            }
        }
        (Slot::One(p), Slot::OneFinal) | (Slot::OneFinal, Slot::One(p)) => {
            key.slots[a] = Slot::Two;
            key.slots[b] = Slot::Two;
            key.slots[pos(p)] = Slot::OneFinal;
            false
        }
        (Slot::OneFinal, Slot::OneFinal) => {
            key.slots[a] = Slot::Two;
            key.slots[b] = Slot::Two;
            true
        }
    };
    if closes {
        if key.slots.iter().any(|s| s.is_open()) {
            return false;
        }
        key.done = true;
    }
    true
}

/// Bitmasks of the first 128 bag positions with nonzero degree and with degree two.
fn masks(slots: &[Slot]) -> (u128, u128) {
    let (mut nz, mut two) = (0u128, 0u128);
    for (i, s) in slots.iter().enumerate().take(128) {
        match s {
            Slot::Zero => {}
            Slot::Two => {
                nz |= 1 << i;
                two |= 1 << i;
            }
            _ => nz |= 1 << i,
        }
    }
    (nz, two)
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum End {
    Bag(usize),
    Final,
}

fn join(mode: Mode<'_>, bag: &[usize], left: &Table, right: &Table, out: &mut Table) {
    let w = bag.len();
    let pos = |v: u32| bag.binary_search(&(v as usize)).expect("partner in bag");
    // right entries grouped by occupied positions; a pair is compatible only if
    // no position carries degree two on one side and any degree on the other
    let mut buckets: HashMap<u128, Vec<(usize, u128)>> = HashMap::new();
    for (ri, r) in right.entries.iter().enumerate() {
        let (nz, two) = masks(&r.key.slots);
        buckets.entry(nz).or_default().push((ri, two));
    }
    let mut buckets: Vec<(u128, Vec<(usize, u128)>)> = buckets.into_iter().collect();
    buckets.sort_unstable_by_key(|b| b.0);
    let budget = out.limit.saturating_mul(JOIN_PAIRS_PER_STATE);
    let mut work = 0usize;
    for (li, l) in left.entries.iter().enumerate() {
        let (lnz, ltwo) = masks(&l.key.slots);
        let pairs = buckets
            .iter()
            .filter(|(rnz, _)| rnz & ltwo == 0)
            .flat_map(|(_, es)| es.iter().filter(|&&(_, rtwo)| rtwo & lnz == 0).map(|&(ri, _)| ri));
        for ri in pairs {
            work += 1;
            if work > budget {
                out.overflow = true;
                return;
            }
            let r = &right.entries[ri];
            let (a, b) = (&l.key, &r.key);
            if a.done && b.done {
                continue;
            }
            let ends = a.ends + b.ends;
            if ends > 2 {
                continue;
            }
            if w > 128 && (0..w).any(|i| a.slots[i].degree() + b.slots[i].degree() > 2) {
                continue;
            }
            let back = Back::Join(li as u32, ri as u32);
            let value = l.value + r.value;
            if a.done || b.done {
                let (d, o) = if a.done { (a, b) } else { (b, a) };
                if o.ends == 0 && o.slots.iter().all(|&s| s == Slot::Zero) {
                    out.offer(d.clone(), value, back);
                }
                continue;
            }
            // link multigraph on bag positions: one link per open fragment end per side
            let mut links: Vec<[Option<(End, usize)>; 2]> = alloc::vec![[None, None]; w];
            let mut slots = alloc::vec![Slot::Zero; w];
            for (side, key) in [a, b].into_iter().enumerate() {
                for i in 0..w {
                    let target = match key.slots[i] {
                        Slot::One(p) => End::Bag(pos(p)),
                        Slot::OneFinal => End::Final,
                        Slot::Two => {
                            slots[i] = Slot::Two;
                            continue;
                        }
                        Slot::Zero => continue,
                    };
                    let slot = if links[i][0].is_none() { 0 } else { 1 };
                    links[i][slot] = Some((target, side));
                }
            }
            let degree = |i: usize| links[i].iter().flatten().count();
            let mut visited = alloc::vec![false; w];
            let mut completions = 0u32;
            let mut bad = false;
            // walk from position `start`, leaving through link `via`
            let walk = |start: usize, via: (End, usize), visited: &mut Vec<bool>| -> End {
                let (mut target, mut side) = via;
                loop {
                    match target {
                        End::Final => return End::Final,
                        End::Bag(j) => {
                            if j == start {
                                return End::Bag(j);
                            }
                            visited[j] = true;
                            if degree(j) == 1 {
                                return End::Bag(j);
                            }
                            // leave j through its link from the other side
                            let next = links[j].iter().flatten().find(|&&(_, s)| s != side).copied();
                            match next {
                                Some((t, s)) => {
                                    target = t;
                                    side = s;
                                }
                                None => return End::Bag(j),
                            }
                        }
                    }
                }
            };
            for i in 0..w {
                match degree(i) {
                    0 => {}
                    1 => {
                        visited[i] = true;
                        let via = links[i][0].or(links[i][1]).expect("one link");
                        slots[i] = match walk(i, via, &mut visited) {
                            End::Final => Slot::OneFinal,
                            End::Bag(j) => Slot::One(bag[j] as u32),
                        };
                    }
                    _ => slots[i] = Slot::Two,
                }
            }
            for i in 0..w {
                if visited[i] || degree(i) != 2 {
                    continue;
                }
                let has_final = links[i].iter().flatten().any(|&(t, _)| t == End::Final);
                if has_final {
                    visited[i] = true;
                    let via = links[i].iter().flatten().find(|&&(t, _)| t != End::Final).copied();
                    let other_end = match via {
                        Some(v) => walk(i, v, &mut visited),
                        None => End::Final,
                    };
                    if other_end == End::Final {
                        completions += 1;
                    }
                }
            }
            for i in 0..w {
                if visited[i] || degree(i) != 2 {
                    continue;
                }
                // closed loop through i
                visited[i] = true;
                let via = links[i][0].expect("two links");
                walk(i, via, &mut visited);
                if mode.is_path() {
                    bad = true;
                }
                completions += 1;
            }
            if bad || completions > 1 {
                continue;
            }
            let done = completions == 1;
            if done && slots.iter().any(|s| s.is_open()) {
                continue;
            }
            let (key, value) = settle(mode, bag, Key { slots, ends, done }, value);
            out.offer(key, value, back);
        }
    }
}

/// A closed long path no longer interacts with the bag: credits the weights of
/// its bag vertices now and clears their slots, so closed states share one key.
fn settle(mode: Mode<'_>, bag: &[usize], mut key: Key, mut value: u64) -> (Key, u64) {
    if key.done && !mode.spanning() {
        for (i, s) in key.slots.iter_mut().enumerate() {
            if *s != Slot::Zero {
                value += mode.weight(bag[i]);
                *s = Slot::Zero;
            }
        }
    }
    (key, value)
}

fn rebuild(
    nice: &crate::treewidth::NiceDecomposition,
    tables: &[Table],
    root: usize,
    entry: usize,
    mode: Mode<'_>,
    n: usize,
) -> Certificate {
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut isolated = None;
    let mut stack = alloc::vec![(root, entry)];
    while let Some((node, idx)) = stack.pop() {
        match (&tables[node].entries[idx].back, nice.nodes[node].kind) {
            (Back::Leaf, _) => {}
            (Back::Intro(c), NiceKind::Introduce { child, .. }) => stack.push((child, *c as usize)),
            (Back::Forget { child: c, edges: es, isolated: iso }, NiceKind::Forget { child, .. }) => {
                edges.extend(es.iter().flatten().map(|&(a, b)| (a as usize, b as usize)));
                if let Some(v) = iso {
                    isolated = Some(*v as usize);
                }
                stack.push((child, *c as usize));
            }
            (Back::Join(l, r), NiceKind::Join { left, right }) => {
                stack.push((left, *l as usize));
                stack.push((right, *r as usize));
            }
            _ => unreachable!("back pointer matches node kind"),
        }
    }
    if let Some(v) = isolated {
        return Certificate::path(alloc::vec![v]);
    }
    let mut adj: Vec<Vec<usize>> = alloc::vec![Vec::new(); n];
    for &(a, b) in &edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    let start = match mode {
        Mode::Cycle => (0..n).find(|&v| !adj[v].is_empty()).expect("cycle has edges"),
        _ => (0..n).find(|&v| adj[v].len() == 1).expect("path has an endpoint"),
    };
    let mut seq = alloc::vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    loop {
        let next = adj[cur].iter().copied().find(|&x| x != prev);
        match next {
            Some(x) if x != start => {
                seq.push(x);
                prev = cur;
                cur = x;
            }
            _ => break,
        }
    }
    match mode {
        Mode::Cycle => Certificate::cycle(seq),
        _ => Certificate::path(seq),
    }
}

