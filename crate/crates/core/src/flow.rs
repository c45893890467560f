//! Integer flow networks: Dinic's max-flow with min-cut extraction, and
//! min-cost flow by successive shortest paths with node potentials.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, VecDeque};

use crate::error::FlowError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Arc {
    pub from: usize,
    pub to: usize,
    pub capacity: i64,
    pub cost: i64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlowNetwork {
    nodes: usize,
    arcs: Vec<Arc>,
    source: usize,
    sink: usize,
}

impl FlowNetwork {
    pub fn new(nodes: usize, source: usize, sink: usize) -> Result<Self, FlowError> {
        for v in [source, sink] {
            if v >= nodes {
                return Err(FlowError::InvalidNode(v));
            }
        }
        if source == sink {
            return Err(FlowError::SourceIsSink);
        }
        Ok(FlowNetwork { nodes, arcs: Vec::new(), source, sink })
    }

    /// Adds an arc and returns its index.
    pub fn add_arc(&mut self, from: usize, to: usize, capacity: i64, cost: i64) -> Result<usize, FlowError> {
        for v in [from, to] {
            if v >= self.nodes {
                return Err(FlowError::InvalidNode(v));
            }
        }
        let idx = self.arcs.len();
        if capacity < 0 {
            return Err(FlowError::NegativeCapacity(idx));
        }
        if to == self.source || from == self.sink {
            return Err(FlowError::TerminalArc(idx));
        }
        self.arcs.push(Arc { from, to, capacity, cost });
        Ok(idx)
    }

    pub fn nodes(&self) -> usize {
        self.nodes
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn source(&self) -> usize {
        self.source
    }

    pub fn sink(&self) -> usize {
        self.sink
    }
}

/// Residual graph with paired forward/backward edges (`e ^ 1` is the twin).
struct Residual {
    head: Vec<usize>,
    cap: Vec<i64>,
    cost: Vec<i64>,
    adj: Vec<Vec<usize>>,
}

impl Residual {
    fn new(net: &FlowNetwork) -> Self {
        let m = net.arcs.len();
        let mut r = Residual {
            head: Vec::with_capacity(2 * m),
            cap: Vec::with_capacity(2 * m),
            cost: Vec::with_capacity(2 * m),
            adj: vec![Vec::new(); net.nodes],
        };
        for a in &net.arcs {
            r.adj[a.from].push(r.head.len());
            r.head.push(a.to);
            r.cap.push(a.capacity);
            r.cost.push(a.cost);
            r.adj[a.to].push(r.head.len());
            r.head.push(a.from);
            r.cap.push(0);
            r.cost.push(-a.cost);
        }
        r
    }

    fn push(&mut self, e: usize, amount: i64) {
        self.cap[e] -= amount;
        self.cap[e ^ 1] += amount;
    }

    /// Flow on original arc `i` (the reverse edge's residual capacity).
    fn arc_flows(&self) -> Vec<i64> {
        (0..self.cap.len() / 2).map(|i| self.cap[2 * i + 1]).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaxFlow {
    pub value: i64,
    /// Nodes reachable from the source in the final residual graph; the arcs
    /// leaving this set form a minimum cut.
    pub source_side: Vec<bool>,
    pub arc_flow: Vec<i64>,
}

pub fn max_flow(net: &FlowNetwork) -> MaxFlow {
    let mut r = Residual::new(net);
    let (s, t) = (net.source, net.sink);
    let n = net.nodes;
    let mut value = 0i64;
    let mut level = vec![usize::MAX; n];
    loop {
        level.fill(usize::MAX);
        level[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for &e in &r.adj[v] {
                let w = r.head[e];
                if r.cap[e] > 0 && level[w] == usize::MAX {
                    level[w] = level[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        if level[t] == usize::MAX {
            break;
        }
        let mut next = vec![0usize; n];
        loop {
            let pushed = blocking_dfs(&mut r, &level, &mut next, s, t, i64::MAX);
            if pushed == 0 {
                break;
            }
            value += pushed;
        }
    }
    let source_side = level.iter().map(|&l| l != usize::MAX).collect();
    MaxFlow { value, source_side, arc_flow: r.arc_flows() }
}

fn blocking_dfs(r: &mut Residual, level: &[usize], next: &mut [usize], v: usize, t: usize, limit: i64) -> i64 {
    if v == t {
        return limit;
    }
    while next[v] < r.adj[v].len() {
        let e = r.adj[v][next[v]];
        let w = r.head[e];
        if r.cap[e] > 0 && level[w] == level[v] + 1 {
            let got = blocking_dfs(r, level, next, w, t, limit.min(r.cap[e]));
            if got > 0 {
                r.push(e, got);
                return got;
            }
        }
        next[v] += 1;
    }
    0
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlowSolution {
    pub value: i64,
    pub cost: i64,
    pub arc_flow: Vec<i64>,
}

/// Minimum cost of a flow of exactly `value` units.
pub fn min_cost_flow(net: &FlowNetwork, value: i64) -> Result<FlowSolution, FlowError> {
    let mut ssp = Ssp::new(net)?;
    while ssp.value < value {
        match ssp.shortest_path() {
            Some((path, _)) => ssp.augment(&path, value - ssp.value),
            None => return Err(FlowError::Infeasible { requested: value, max: ssp.value }),
        }
    }
    Ok(ssp.solution())
}

/// Minimum cost over all feasible flow values. Successive path costs are
/// nondecreasing, so augmentation stops at the first path of cost `>= 0`.
pub fn min_cost_flow_best(net: &FlowNetwork) -> Result<FlowSolution, FlowError> {
    let mut ssp = Ssp::new(net)?;
    while let Some((path, cost)) = ssp.shortest_path() {
        if cost >= 0 {
            break;
        }
        ssp.augment(&path, i64::MAX);
    }
    Ok(ssp.solution())
}

/// Minimum cost at every flow value `0..=max`, by successive augmentation.
pub fn min_cost_curve(net: &FlowNetwork) -> Result<Vec<i64>, FlowError> {
    let mut ssp = Ssp::new(net)?;
    let mut curve = vec![0];
    while let Some((path, unit)) = ssp.shortest_path() {
        let before = ssp.value;
        ssp.augment(&path, i64::MAX);
        let last = *curve.last().unwrap();
        for step in 1..=(ssp.value - before) {
            curve.push(last + unit * step);
        }
    }
    Ok(curve)
}

struct Ssp {
    r: Residual,
    source: usize,
    sink: usize,
    potential: Vec<i64>,
    value: i64,
    cost: i64,
}

const UNREACHED: i64 = i64::MAX;

impl Ssp {
    fn new(net: &FlowNetwork) -> Result<Self, FlowError> {
        let r = Residual::new(net);
        let potential = initial_potentials(net)?;
        Ok(Ssp { r, source: net.source, sink: net.sink, potential, value: 0, cost: 0 })
    }

    /// Dijkstra on reduced costs. Returns the edge path and its true cost.
    fn shortest_path(&mut self) -> Option<(Vec<usize>, i64)> {
        let n = self.r.adj.len();
        let mut dist = vec![UNREACHED; n];
        let mut via = vec![usize::MAX; n];
        dist[self.source] = 0;
        let mut heap = BinaryHeap::from([Reverse((0i64, self.source))]);
        while let Some(Reverse((d, v))) = heap.pop() {
            if d > dist[v] {
                continue;
            }
            for &e in &self.r.adj[v] {
                if self.r.cap[e] <= 0 {
                    continue;
                }
                let w = self.r.head[e];
                let reduced = self.r.cost[e] + self.potential[v] - self.potential[w];
                debug_assert!(reduced >= 0, "negative reduced cost");
                let nd = d + reduced;
                if nd < dist[w] {
                    dist[w] = nd;
                    via[w] = e;
                    heap.push(Reverse((nd, w)));
                }
            }
        }
        if dist[self.sink] == UNREACHED {
            return None;
        }
        for (pi, &d) in self.potential.iter_mut().zip(&dist) {
            if d != UNREACHED {
                *pi += d;
            }
        }
        let mut path = Vec::new();
        let mut v = self.sink;
        while v != self.source {
            let e = via[v];
            path.push(e);
            v = self.r.head[e ^ 1];
        }
        path.reverse();
        let cost = path.iter().map(|&e| self.r.cost[e]).sum();
        Some((path, cost))
    }

    fn augment(&mut self, path: &[usize], limit: i64) {
        let amount = path.iter().map(|&e| self.r.cap[e]).min().unwrap_or(0).min(limit);
        let unit: i64 = path.iter().map(|&e| self.r.cost[e]).sum();
        for &e in path {
            self.r.push(e, amount);
        }
        self.value += amount;
        self.cost += unit * amount;
    }

    fn solution(&self) -> FlowSolution {
        FlowSolution { value: self.value, cost: self.cost, arc_flow: self.r.arc_flows() }
    }
}

/// Shortest distances from the source over arcs with positive capacity.
/// Acyclic networks use a topological-order pass; otherwise Bellman-Ford.
/// Unreachable nodes get potential 0; they stay unreachable.
fn initial_potentials(net: &FlowNetwork) -> Result<Vec<i64>, FlowError> {
    let n = net.nodes;
    let usable: Vec<&Arc> = net.arcs.iter().filter(|a| a.capacity > 0).collect();
    let mut dist = vec![UNREACHED; n];
    dist[net.source] = 0;

    let mut indeg = vec![0usize; n];
    let mut out: Vec<Vec<&Arc>> = vec![Vec::new(); n];
    for a in &usable {
        indeg[a.to] += 1;
        out[a.from].push(a);
    }
    let mut queue: VecDeque<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
    let mut order = Vec::with_capacity(n);
    while let Some(v) = queue.pop_front() {
        order.push(v);
        for a in &out[v] {
            indeg[a.to] -= 1;
            if indeg[a.to] == 0 {
                queue.push_back(a.to);
            }
        }
    }
    if order.len() == n {
        for v in order {
            if dist[v] == UNREACHED {
                continue;
            }
            for a in &out[v] {
                dist[a.to] = dist[a.to].min(dist[v] + a.cost);
            }
        }
    } else {
        for round in 0..=n {
            let mut changed = false;
            for a in &usable {
                if dist[a.from] != UNREACHED && dist[a.from] + a.cost < dist[a.to] {
                    dist[a.to] = dist[a.from] + a.cost;
                    changed = true;
                }
            }
            if !changed {
                break;
            }
            if round == n {
                return Err(FlowError::NegativeCycle);
            }
        }
    }
    Ok(dist.into_iter().map(|d| if d == UNREACHED { 0 } else { d }).collect())
}

/// Node potentials `p` certifying optimality of `arc_flow`: every residual
/// edge `u -> v` of cost `c` satisfies `p[v] <= p[u] + c`. With
/// `return_arc`, an uncapacitated zero-cost sink-to-source arc carrying the
/// flow value is included, which turns the flow into a circulation.
/// Normalised so the source has potential 0. Fails when the residual graph
/// has a negative cycle, i.e. the flow is not optimal.
pub fn residual_potentials(net: &FlowNetwork, arc_flow: &[i64], return_arc: bool) -> Result<Vec<i64>, FlowError> {
    let n = net.nodes;
    let mut edges: Vec<(usize, usize, i64)> = Vec::new();
    for (a, &f) in net.arcs.iter().zip(arc_flow) {
        if f < a.capacity {
            edges.push((a.from, a.to, a.cost));
        }
        if f > 0 {
            edges.push((a.to, a.from, -a.cost));
        }
    }
    if return_arc {
        edges.push((net.sink, net.source, 0));
        let value: i64 = net.arcs.iter().zip(arc_flow).filter(|(a, _)| a.from == net.source).map(|(_, &f)| f).sum();
        if value > 0 {
            edges.push((net.source, net.sink, 0));
        }
    }
    let mut out: Vec<Vec<(usize, i64)>> = vec![Vec::new(); n];
    for &(u, v, c) in &edges {
        out[u].push((v, c));
    }
    // Queue-based Bellman-Ford from a virtual root joined to every node.
    let mut dist = vec![0i64; n];
    let mut in_queue = vec![true; n];
    let mut relax_count = vec![0usize; n];
    let mut queue: VecDeque<usize> = (0..n).collect();
    while let Some(u) = queue.pop_front() {
        in_queue[u] = false;
        for &(v, c) in &out[u] {
            if dist[u] + c < dist[v] {
                dist[v] = dist[u] + c;
                relax_count[v] += 1;
                if relax_count[v] > n {
                    return Err(FlowError::NegativeCycle);
                }
                if !in_queue[v] {
                    in_queue[v] = true;
                    queue.push_back(v);
                }
            }
        }
    }
    let shift = dist[net.source];
    Ok(dist.into_iter().map(|d| d - shift).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_arc() {
        let mut net = FlowNetwork::new(2, 0, 1).unwrap();
        net.add_arc(0, 1, 1, 0).unwrap();
        assert_eq!(max_flow(&net).value, 1);
    }

    #[test]
    fn disconnected() {
        let mut net = FlowNetwork::new(4, 0, 3).unwrap();
        net.add_arc(0, 1, 5, 0).unwrap();
        net.add_arc(2, 3, 5, 0).unwrap();
        let mf = max_flow(&net);
        assert_eq!(mf.value, 0);
        assert_eq!(mf.source_side, vec![true, true, false, false]);
    }

    #[test]
    fn invalid_networks() {
        assert_eq!(FlowNetwork::new(2, 1, 1).unwrap_err(), FlowError::SourceIsSink);
        assert_eq!(FlowNetwork::new(2, 0, 2).unwrap_err(), FlowError::InvalidNode(2));
        let mut net = FlowNetwork::new(3, 0, 2).unwrap();
        assert_eq!(net.add_arc(1, 0, 1, 0).unwrap_err(), FlowError::TerminalArc(0));
        assert_eq!(net.add_arc(2, 1, 1, 0).unwrap_err(), FlowError::TerminalArc(0));
        assert_eq!(net.add_arc(0, 1, -1, 0).unwrap_err(), FlowError::NegativeCapacity(0));
    }

    #[test]
    fn min_cost_prefers_cheap_route() {
        // Two parallel routes of capacity 1: cost 1 and cost 5.
        let mut net = FlowNetwork::new(4, 0, 3).unwrap();
        net.add_arc(0, 1, 1, 1).unwrap();
        net.add_arc(1, 3, 1, 0).unwrap();
        net.add_arc(0, 2, 1, 5).unwrap();
        net.add_arc(2, 3, 1, 0).unwrap();
        assert_eq!(min_cost_flow(&net, 1).unwrap().cost, 1);
        assert_eq!(min_cost_flow(&net, 2).unwrap().cost, 6);
        assert_eq!(
            min_cost_flow(&net, 3).unwrap_err(),
            FlowError::Infeasible { requested: 3, max: 2 }
        );
        assert_eq!(min_cost_curve(&net).unwrap(), vec![0, 1, 6]);
    }

    #[test]
    fn negative_costs_best_value() {
        // Route A gains 3, route B costs 2: best total is -3 at value 1.
        let mut net = FlowNetwork::new(4, 0, 3).unwrap();
        net.add_arc(0, 1, 1, -3).unwrap();
        net.add_arc(1, 3, 1, 0).unwrap();
        net.add_arc(0, 2, 1, 2).unwrap();
        net.add_arc(2, 3, 1, 0).unwrap();
        let best = min_cost_flow_best(&net).unwrap();
        assert_eq!((best.value, best.cost), (1, -3));
        let p = residual_potentials(&net, &best.arc_flow, true).unwrap();
        assert_eq!(p[0], 0);
    }

    #[test]
    fn cyclic_network_uses_bellman_ford() {
        let mut net = FlowNetwork::new(4, 0, 3).unwrap();
        net.add_arc(0, 1, 2, 1).unwrap();
        net.add_arc(1, 2, 2, -1).unwrap();
        net.add_arc(2, 1, 2, 2).unwrap();
        net.add_arc(2, 3, 2, 0).unwrap();
        assert_eq!(min_cost_flow(&net, 2).unwrap().cost, 0);

        let mut bad = FlowNetwork::new(4, 0, 3).unwrap();
        bad.add_arc(0, 1, 1, 0).unwrap();
        bad.add_arc(1, 2, 1, -2).unwrap();
        bad.add_arc(2, 1, 1, 1).unwrap();
        bad.add_arc(2, 3, 1, 0).unwrap();
        assert_eq!(min_cost_flow(&bad, 1).unwrap_err(), FlowError::NegativeCycle);
    }
}
