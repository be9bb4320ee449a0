use std::fmt;

/// A directed graph with designated source and target, 0-based vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Digraph {
    num_vertices: usize,
    edges: Vec<(usize, usize)>,
    source: usize,
    target: usize,
}

impl Digraph {
    pub fn new(
        num_vertices: usize,
        edges: Vec<(usize, usize)>,
        source: usize,
        target: usize,
    ) -> Self {
        Digraph {
            num_vertices,
            edges,
            source,
            target,
        }
    }

    pub fn num_vertices(&self) -> usize {
        self.num_vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn source(&self) -> usize {
        self.source
    }

    pub fn target(&self) -> usize {
        self.target
    }

    pub fn out_adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.num_vertices];
        for &(u, v) in &self.edges {
            adj[u].push(v);
        }
        adj
    }

    pub fn in_degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.num_vertices];
        for &(_, v) in &self.edges {
            deg[v] += 1;
        }
        deg
    }

    pub fn out_degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.num_vertices];
        for &(u, _) in &self.edges {
            deg[u] += 1;
        }
        deg
    }

    /// Total degree (in + out) per vertex.
    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.num_vertices];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    pub fn with_endpoints(&self, source: usize, target: usize) -> Self {
        Digraph {
            source,
            target,
            ..self.clone()
        }
    }
}

impl fmt::Display for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "p digraph {} {}", self.num_vertices, self.edges.len())?;
        for &(u, v) in &self.edges {
            writeln!(f, "e {} {}", u + 1, v + 1)?;
        }
        writeln!(f, "s {}", self.source + 1)?;
        writeln!(f, "t {}", self.target + 1)
    }
}

/// An undirected graph; every edge is stored as `(u, v)` with `u < v`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct UGraph {
    num_vertices: usize,
    edges: Vec<(usize, usize)>,
}

impl UGraph {
    /// Edge endpoints are reordered so that the smaller id comes first.
    pub fn new(num_vertices: usize, edges: Vec<(usize, usize)>) -> Self {
        let edges = edges
            .into_iter()
            .map(|(u, v)| if u <= v { (u, v) } else { (v, u) })
            .collect();
        UGraph {
            num_vertices,
            edges,
        }
    }

    pub fn num_vertices(&self) -> usize {
        self.num_vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.num_vertices];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.num_vertices];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        adj
    }

    /// Grip flags per edge: both endpoints have degree at most 2.
    pub fn grips(&self) -> Vec<bool> {
        let deg = self.degrees();
        self.edges
            .iter()
            .map(|&(u, v)| deg[u] <= 2 && deg[v] <= 2)
            .collect()
    }
}

impl fmt::Display for UGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "p graph {} {}", self.num_vertices, self.edges.len())?;
        for &(u, v) in &self.edges {
            writeln!(f, "e {} {}", u + 1, v + 1)?;
        }
        Ok(())
    }
}

/// Whether all vertices lie in one (weakly) connected component.
pub(crate) fn is_connected(num_vertices: usize, edges: &[(usize, usize)]) -> bool {
    if num_vertices == 0 {
        return true;
    }
    let mut adj = vec![Vec::new(); num_vertices];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    let mut seen = vec![false; num_vertices];
    let mut stack = vec![0];
    seen[0] = true;
    let mut count = 1;
    while let Some(u) = stack.pop() {
        for &w in &adj[u] {
            if !seen[w] {
                seen[w] = true;
                count += 1;
                stack.push(w);
            }
        }
    }
    count == num_vertices
}
