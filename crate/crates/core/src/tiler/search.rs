use std::sync::atomic::{AtomicBool, AtomicU64, Ordering as AtomicOrdering};
use std::time::{Duration, Instant};

use rayon::prelude::*;

use super::frontier::{apply_placement, audit, audit_placement, edges_composable, order_frontiers};
use super::{placements_at_corner, tile_area, Frontier, Geometry, PlacedTile, Placement, Region};
use crate::numerics::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    pub allow_mirror: bool,
    pub node_limit: Option<u64>,
    pub time_limit: Option<Duration>,
    /// Keep going after the first tiling.
    pub find_all: bool,
    /// Depth expanded sequentially before subtrees are handed to worker threads.
    /// Zero searches on the calling thread.
    pub parallel_depth: usize,
    /// Stop descending after this many placed tiles.
    pub depth_limit: Option<usize>,
    /// Re-check area and corner angles of every new frontier.
    pub audit: bool,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            allow_mirror: true,
            node_limit: None,
            time_limit: None,
            find_all: false,
            parallel_depth: 0,
            depth_limit: None,
            audit: false,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SearchStatus {
    Found,
    /// The whole tree was explored without finding a tiling.
    Exhausted,
    /// A node, time or depth limit cut the search short.
    LimitHit,
}

impl std::fmt::Display for SearchStatus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            SearchStatus::Found => "found",
            SearchStatus::Exhausted => "exhausted",
            SearchStatus::LimitHit => "limit-hit",
        })
    }
}

#[derive(Clone, Debug)]
pub struct SearchResult {
    pub status: SearchStatus,
    pub tilings: Vec<Vec<PlacedTile>>,
    pub nodes: u64,
    pub max_depth: usize,
    /// Some branch was cut by a limit.
    pub truncated: bool,
    pub audit_failures: Vec<String>,
}

impl SearchResult {
    fn empty(status: SearchStatus) -> Self {
        SearchResult {
            status,
            tilings: Vec::new(),
            nodes: 0,
            max_depth: 0,
            truncated: false,
            audit_failures: Vec::new(),
        }
    }
}

#[derive(Clone)]
struct State {
    stack: Vec<Frontier>,
    placed: Vec<PlacedTile>,
}

struct Shared<'a> {
    cfg: &'a SearchConfig,
    start: Instant,
    nodes: AtomicU64,
    stop: AtomicBool,
    limit_hit: AtomicBool,
}

impl Shared<'_> {
    fn tick(&self) -> bool {
        let n = self.nodes.fetch_add(1, AtomicOrdering::Relaxed) + 1;
        if self.stop.load(AtomicOrdering::Relaxed) {
            return false;
        }
        let over_nodes = self.cfg.node_limit.is_some_and(|l| n > l);
        let over_time =
            n % 256 == 0 && self.cfg.time_limit.is_some_and(|l| self.start.elapsed() > l);
        if over_nodes || over_time {
            self.limit_hit.store(true, AtomicOrdering::Relaxed);
            self.stop.store(true, AtomicOrdering::Relaxed);
            return false;
        }
        true
    }
}

struct Worker<'a, 's> {
    shared: &'s Shared<'a>,
    geo: Geometry,
    tilings: Vec<Vec<PlacedTile>>,
    max_depth: usize,
    truncated: bool,
    audit_failures: Vec<String>,
}

impl<'a, 's> Worker<'a, 's> {
    fn new(shared: &'s Shared<'a>, geo: Geometry) -> Self {
        Worker { shared, geo, tilings: Vec::new(), max_depth: 0, truncated: false, audit_failures: Vec::new() }
    }

    fn done(&self) -> bool {
        !self.shared.cfg.find_all && !self.tilings.is_empty()
    }

    /// Children of a state, in the order they are explored.
    fn expand(&mut self, st: &State) -> Vec<State> {
        let mut stack = st.stack.clone();
        let Some(f) = stack.pop() else { return Vec::new() };
        let idx = f.select_corner(&mut self.geo);
        let mut out = Vec::new();
        for p in placements_at_corner(&f, idx, &mut self.geo, self.shared.cfg) {
            let Some(mut children) = apply_placement(&f, &p, &mut self.geo) else { continue };
            self.audit(&p, &children);
            order_frontiers(&mut children);
            let mut next = State { stack: stack.clone(), placed: st.placed.clone() };
            next.stack.extend(children);
            next.placed.push(p.tile);
            out.push(next);
        }
        out
    }

    fn dfs(&mut self, stack: &mut Vec<Frontier>, placed: &mut Vec<PlacedTile>) {
        if !self.shared.tick() {
            return;
        }
        let depth = placed.len();
        self.max_depth = self.max_depth.max(depth);
        let Some(f) = stack.pop() else {
            self.tilings.push(placed.clone());
            return;
        };
        if self.shared.cfg.depth_limit.is_some_and(|l| depth >= l) {
            self.truncated = true;
            stack.push(f);
            return;
        }
        let idx = f.select_corner(&mut self.geo);
        for p in placements_at_corner(&f, idx, &mut self.geo, self.shared.cfg) {
            let Some(mut children) = apply_placement(&f, &p, &mut self.geo) else { continue };
            self.audit(&p, &children);
            order_frontiers(&mut children);
            let base = stack.len();
            stack.extend(children);
            placed.push(p.tile);
            self.dfs(stack, placed);
            placed.pop();
            stack.truncate(base);
            if self.done() || self.shared.stop.load(AtomicOrdering::Relaxed) {
                break;
            }
        }
        stack.push(f);
    }

    fn run(&mut self, st: &State) {
        let (mut stack, mut placed) = (st.stack.clone(), st.placed.clone());
        self.dfs(&mut stack, &mut placed);
    }

    fn audit(&mut self, p: &Placement, children: &[Frontier]) {
        if !self.shared.cfg.audit {
            return;
        }
        let placed = audit_placement(p);
        for r in std::iter::once(placed).chain(children.iter().map(|c| audit(c, &mut self.geo))) {
            if let Err(e) = r {
                if self.audit_failures.len() < 16 {
                    self.audit_failures.push(e);
                }
            }
        }
    }
}

/// Searches for tilings of `region` by `n` copies of its tile.
pub fn search(region: &Region, n: u64, cfg: &SearchConfig) -> SearchResult {
    let want = tile_area(&region.tile).scale(&Rational::from_integer(n.into()));
    if n == 0 || region.area() != want {
        return SearchResult::empty(SearchStatus::Exhausted);
    }
    let mut geo = Geometry::new(region.tile);
    let root = Frontier::from_region(region, n);
    if !edges_composable(&root, &mut geo) {
        let mut r = SearchResult::empty(SearchStatus::Exhausted);
        r.nodes = 1;
        return r;
    }
    let shared = Shared {
        cfg,
        start: Instant::now(),
        nodes: AtomicU64::new(0),
        stop: AtomicBool::new(false),
        limit_hit: AtomicBool::new(false),
    };
    let root = State { stack: vec![root], placed: Vec::new() };

    let mut main = Worker::new(&shared, geo.clone());
    if cfg.parallel_depth == 0 {
        main.run(&root);
        return finish(&shared, vec![main]);
    }

    // Expand the first levels in search order, then hand each subtree to a worker.
    let mut frontier = vec![root];
    for _ in 0..cfg.parallel_depth {
        let mut next = Vec::new();
        for st in &frontier {
            if st.stack.is_empty() || cfg.depth_limit.is_some_and(|l| st.placed.len() >= l) {
                next.push(st.clone());
            } else if shared.tick() {
                main.max_depth = main.max_depth.max(st.placed.len());
                next.extend(main.expand(st));
            }
        }
        frontier = next;
    }
    let workers: Vec<Worker> = frontier
        .par_iter()
        .map(|st| {
            let mut w = Worker::new(&shared, geo.clone());
            w.run(st);
            w
        })
        .collect();
    let mut all = vec![main];
    all.extend(workers);
    finish(&shared, all)
}

fn finish(shared: &Shared, workers: Vec<Worker>) -> SearchResult {
    let mut r = SearchResult::empty(SearchStatus::Exhausted);
    r.nodes = shared.nodes.load(AtomicOrdering::Relaxed);
    let limit_hit = shared.limit_hit.load(AtomicOrdering::Relaxed);
    for w in workers {
        r.tilings.extend(w.tilings);
        r.max_depth = r.max_depth.max(w.max_depth);
        r.truncated |= w.truncated;
        r.audit_failures.extend(w.audit_failures);
    }
    if !shared.cfg.find_all {
        r.tilings.truncate(1);
    }
    r.truncated |= limit_hit;
    r.status = if !r.tilings.is_empty() {
        SearchStatus::Found
    } else if r.truncated {
        SearchStatus::LimitHit
    } else {
        SearchStatus::Exhausted
    };
    r
}

/// Depth-limited searches at depths `1..=max_depth`, one result per depth.
pub fn explore_levels(
    region: &Region,
    n: u64,
    cfg: &SearchConfig,
    max_depth: usize,
) -> Vec<(usize, SearchResult)> {
    (1..=max_depth)
        .map(|d| {
            let c = SearchConfig { depth_limit: Some(d), ..cfg.clone() };
            (d, search(region, n, &c))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numtheory::Triple;

    #[test]
    fn similar_four() {
        for (a, b, c) in [(3, 5, 7), (7, 8, 13)] {
            let t = Triple::new(a, b, c).unwrap();
            let r = Region::similar(t, 2);
            let res = search(&r, 4, &SearchConfig { audit: true, ..Default::default() });
            assert_eq!(res.status, SearchStatus::Found, "{t}");
            assert_eq!(res.tilings[0].len(), 4);
            assert!(res.audit_failures.is_empty(), "{:?}", res.audit_failures);
        }
    }

    #[test]
    fn wrong_count_is_exhausted() {
        let t = Triple::new(3, 5, 7).unwrap();
        let r = Region::similar(t, 2);
        let res = search(&r, 5, &SearchConfig::default());
        assert_eq!((res.status, res.nodes), (SearchStatus::Exhausted, 0));
    }
}
