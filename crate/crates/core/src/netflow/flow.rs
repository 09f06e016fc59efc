use std::collections::VecDeque;

/// A directed network with integer capacities.
///
/// Arcs keep their insertion index; augmentation always scans arcs in that
/// order, so results are deterministic.
#[derive(Clone, Debug)]
pub struct FlowNetwork {
    nodes: usize,
    source: usize,
    sink: usize,
    arcs: Vec<(usize, usize, i64)>,
}

/// Result of [`FlowNetwork::max_flow`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaxFlow {
    pub value: i64,
    /// Flow on each arc, indexed like the arcs of the network.
    pub flow: Vec<i64>,
    /// Nodes reachable from the source in the final residual network.
    pub source_side: Vec<bool>,
}

impl FlowNetwork {
    pub fn new(nodes: usize, source: usize, sink: usize) -> Self {
        assert!(source < nodes && sink < nodes, "terminal out of range");
        FlowNetwork {
            nodes,
            source,
            sink,
            arcs: Vec::new(),
        }
    }

    pub fn add_arc(&mut self, from: usize, to: usize, capacity: i64) -> usize {
        assert!(from < self.nodes && to < self.nodes, "arc endpoint out of range");
        assert!(capacity >= 0, "negative capacity");
        self.arcs.push((from, to, capacity));
        self.arcs.len() - 1
    }

    pub fn node_count(&self) -> usize {
        self.nodes
    }

    pub fn arcs(&self) -> &[(usize, usize, i64)] {
        &self.arcs
    }

    /// Total capacity of arcs leaving the node set `side`.
    pub fn cut_capacity(&self, side: &[bool]) -> i64 {
        self.arcs
            .iter()
            .filter(|&&(a, b, _)| side[a] && !side[b])
            .map(|&(_, _, c)| c)
            .sum()
    }

    /// Integral maximum flow by blocking flows along shortest residual paths.
    pub fn max_flow(&self) -> MaxFlow {
        let mut res = Residual::new(self);
        let mut value = 0;
        if self.source != self.sink {
            while res.bfs(self.source, self.sink) {
                res.iter.iter_mut().for_each(|i| *i = 0);
                loop {
                    let pushed = res.dfs(self.source, self.sink, i64::MAX);
                    if pushed == 0 {
                        break;
                    }
                    value += pushed;
                }
            }
        }
        let source_side = res.reachable(self.source);
        let flow = (0..self.arcs.len()).map(|i| res.cap[2 * i + 1]).collect();
        MaxFlow {
            value,
            flow,
            source_side,
        }
    }
}

struct Residual {
    head: Vec<usize>,
    cap: Vec<i64>,
    adj: Vec<Vec<usize>>,
    level: Vec<i32>,
    iter: Vec<usize>,
}

impl Residual {
    fn new(net: &FlowNetwork) -> Self {
        let mut adj = vec![Vec::new(); net.nodes];
        let mut head = Vec::with_capacity(2 * net.arcs.len());
        let mut cap = Vec::with_capacity(2 * net.arcs.len());
        for (i, &(a, b, c)) in net.arcs.iter().enumerate() {
            adj[a].push(2 * i);
            head.push(b);
            cap.push(c);
            adj[b].push(2 * i + 1);
            head.push(a);
            cap.push(0);
        }
        Residual {
            head,
            cap,
            adj,
            level: vec![-1; net.nodes],
            iter: vec![0; net.nodes],
        }
    }

    fn bfs(&mut self, s: usize, t: usize) -> bool {
        self.level.iter_mut().for_each(|l| *l = -1);
        self.level[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &e in &self.adj[u] {
                let v = self.head[e];
                if self.cap[e] > 0 && self.level[v] < 0 {
                    self.level[v] = self.level[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        self.level[t] >= 0
    }

    fn dfs(&mut self, u: usize, t: usize, limit: i64) -> i64 {
        if u == t {
            return limit;
        }
        while self.iter[u] < self.adj[u].len() {
            let e = self.adj[u][self.iter[u]];
            let v = self.head[e];
            if self.cap[e] > 0 && self.level[v] == self.level[u] + 1 {
                let pushed = self.dfs(v, t, limit.min(self.cap[e]));
                if pushed > 0 {
                    self.cap[e] -= pushed;
                    self.cap[e ^ 1] += pushed;
                    return pushed;
                }
            }
            self.iter[u] += 1;
        }
        0
    }

    fn reachable(&self, s: usize) -> Vec<bool> {
        let mut seen = vec![false; self.adj.len()];
        seen[s] = true;
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            for &e in &self.adj[u] {
                let v = self.head[e];
                if self.cap[e] > 0 && !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
        seen
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn single_arc() {
        let mut net = FlowNetwork::new(2, 0, 1);
        net.add_arc(0, 1, 5);
        assert_eq!(net.max_flow().value, 5);
    }

    #[test]
    fn diamond() {
        // s=0, a=1, b=2, t=3
        let mut net = FlowNetwork::new(4, 0, 3);
        net.add_arc(0, 1, 2);
        net.add_arc(0, 2, 2);
        net.add_arc(1, 3, 1);
        net.add_arc(2, 3, 3);
        let mf = net.max_flow();
        assert_eq!(mf.value, 3);
        assert_eq!(net.cut_capacity(&mf.source_side), 3);
    }

    #[test]
    fn disconnected() {
        let mut net = FlowNetwork::new(3, 0, 2);
        net.add_arc(0, 1, 4);
        assert_eq!(net.max_flow().value, 0);
        assert_eq!(FlowNetwork::new(2, 0, 1).max_flow().value, 0);
    }

    fn arb_network() -> impl Strategy<Value = FlowNetwork> {
        (2usize..8, prop::collection::vec((0usize..8, 0usize..8, 0i64..6), 0..20)).prop_map(
            |(nodes, arcs)| {
                let mut net = FlowNetwork::new(nodes, 0, nodes - 1);
                for (a, b, c) in arcs {
                    net.add_arc(a % nodes, b % nodes, c);
                }
                net
            },
        )
    }

    proptest! {
        #[test]
        fn flow_is_feasible_and_matches_cut(net in arb_network()) {
            let mf = net.max_flow();
            let n = net.node_count();
            let mut balance = vec![0i64; n];
            for (&(a, b, c), &f) in net.arcs().iter().zip(&mf.flow) {
                prop_assert!(0 <= f && f <= c);
                balance[a] -= f;
                balance[b] += f;
            }
            for v in 1..n - 1 {
                prop_assert_eq!(balance[v], 0);
            }
            prop_assert_eq!(balance[n - 1], mf.value);
            prop_assert!(mf.source_side[0] && !mf.source_side[n - 1]);
            prop_assert_eq!(net.cut_capacity(&mf.source_side), mf.value);
        }
    }
}
