use super::{ensure_verified, ConstructionReport, Theorem};
use crate::error::{Error, Result};
use crate::graph::{Color, Graph, Vertex};
use crate::structure::{ear_decomposition, is_2_connected, minimally_2connected_spanning};
use crate::verify::WindowParam;

const PALETTE: usize = 5;

/// Two or three length-2 paths `[x, a, b]` (edges `xa`, `ab`) ending at `x`.
///
/// The colorer keeps one per vertex and guarantees that every pair `x, y` is
/// joined by a distance-2 proper path whose first two edges form a path of
/// `x`'s set and whose last two edges form a path of `y`'s set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnchorSet {
    pub end: Vertex,
    pub paths: Vec<[Vertex; 3]>,
}

impl AnchorSet {
    fn new(paths: Vec<[Vertex; 3]>) -> Self {
        AnchorSet {
            end: paths[0][0],
            paths,
        }
    }

    /// Distinct colors on the set's edges.
    pub fn colors(&self, graph: &Graph, colors: &[Color]) -> Vec<Color> {
        let mut out: Vec<Color> = self
            .paths
            .iter()
            .flat_map(|p| [(p[0], p[1]), (p[1], p[2])])
            .map(|(a, b)| colors[graph.edge_id(a, b).unwrap()])
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// The distinct second vertices, i.e. the set's edges at `end`.
    fn first_hops(&self) -> Vec<Vertex> {
        let mut hops: Vec<Vertex> = self.paths.iter().map(|p| p[1]).collect();
        hops.sort_unstable();
        hops.dedup();
        hops
    }

    fn contains(&self, path: [Vertex; 3]) -> bool {
        self.paths.contains(&path)
    }
}

/// What happened when one ear was colored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EarStep {
    pub ear: usize,
    /// The ear was attached from its last vertex to its first.
    pub reversed: bool,
    pub case: String,
    /// The largest anchor color count over all vertices after this ear.
    pub max_anchor_colors: usize,
}

/// Five colors for a 2-connected graph at `ℓ = 2`.
pub fn color_2connected(graph: &Graph) -> Result<ConstructionReport> {
    color_2connected_traced(graph).map(|(report, _)| report)
}

/// [`color_2connected`] plus a record of every ear.
///
/// The coloring runs on a minimally 2-connected spanning subgraph and its
/// ear decomposition: the base cycle is colored `1, 2, 3, …` with 4 (and 5)
/// on the leftover edges, then each ear is colored from an anchored path
/// between its ends, keeping at most four colors on every anchor set. Edges
/// outside the subgraph get color 1.
pub fn color_2connected_traced(graph: &Graph) -> Result<(ConstructionReport, Vec<EarStep>)> {
    if !is_2_connected(graph) {
        return Err(Error::Precondition("graph is not 2-connected".into()));
    }
    let h = minimally_2connected_spanning(graph)?;
    let dec = ear_decomposition(&h)?;
    let mut st = State {
        graph,
        colors: vec![0; graph.m()],
        anchors: vec![None; graph.n()],
        present: vec![false; graph.n()],
    };

    let cycle = &dec.base_cycle;
    let r = cycle.len();
    let full = r - r % 3;
    for k in 0..r {
        let c = if k < full { k % 3 + 1 } else { 4 + (k - full) };
        st.set(cycle[k], cycle[(k + 1) % r], c);
    }
    for k in 0..r {
        let x = cycle[k];
        st.present[x] = true;
        st.anchors[x] = Some(AnchorSet::new(vec![
            [x, cycle[(k + 1) % r], cycle[(k + 2) % r]],
            [x, cycle[(k + r - 1) % r], cycle[(k + r - 2) % r]],
        ]));
    }
    st.check_property_3(usize::MAX, "base cycle")?;

    let mut steps = Vec::with_capacity(dec.ears.len());
    for (idx, ear) in dec.ears.iter().enumerate() {
        let mut done = None;
        for reversed in [false, true] {
            let mut oriented = ear.clone();
            if reversed {
                oriented.reverse();
            }
            if let Some(anchor_path) = st.anchored_path(oriented[0], oriented[oriented.len() - 1]) {
                let case = st.attach(idx, &oriented, &anchor_path)?;
                done = Some((reversed, case));
                break;
            }
        }
        let (reversed, case) = done.ok_or_else(|| {
            Error::Invariant(format!(
                "ear {idx}: no anchored distance-2 proper path between {} and {}",
                ear[0],
                ear[ear.len() - 1]
            ))
        })?;
        let max = st.check_property_3(idx, &case)?;
        steps.push(EarStep {
            ear: idx,
            reversed,
            case,
            max_anchor_colors: max,
        });
    }

    let colors = st.colors.iter().map(|&c| if c == 0 { 1 } else { c }).collect();
    let notes = format!("{} ears on a base cycle of length {r}", dec.ears.len());
    let report = ConstructionReport::new(colors, PALETTE, Theorem::TwoConnected, notes)?;
    ensure_verified(graph, &report, WindowParam::new(2)?)?;
    Ok((report, steps))
}

struct State<'g> {
    graph: &'g Graph,
    /// 0 marks an edge not yet colored.
    colors: Vec<Color>,
    anchors: Vec<Option<AnchorSet>>,
    present: Vec<bool>,
}

/// The lowest color of `1..=5` outside `avoid`.
fn lowest_avoiding(avoid: &[Color]) -> Option<Color> {
    (1..=PALETTE).find(|c| !avoid.contains(c))
}

/// The lowest color of `candidates` outside `avoid`.
fn lowest_among(candidates: &[Color], avoid: &[Color]) -> Option<Color> {
    let mut c: Vec<Color> = candidates.iter().copied().filter(|c| !avoid.contains(c)).collect();
    c.sort_unstable();
    c.first().copied()
}

impl State<'_> {
    fn id(&self, a: Vertex, b: Vertex) -> usize {
        self.graph.edge_id(a, b).expect("ear and cycle edges belong to the graph")
    }

    fn get(&self, a: Vertex, b: Vertex) -> Color {
        self.colors[self.id(a, b)]
    }

    fn set(&mut self, a: Vertex, b: Vertex, c: Color) {
        let id = self.id(a, b);
        self.colors[id] = c;
    }

    fn anchor(&self, x: Vertex) -> &AnchorSet {
        self.anchors[x].as_ref().expect("present vertices carry anchor sets")
    }

    /// A distance-2 proper path of length at least 2 from `u` to `v` in the
    /// colored part, starting with a path of `u`'s anchor set and ending with
    /// (the reverse of) a path of `v`'s.
    fn anchored_path(&self, u: Vertex, v: Vertex) -> Option<Vec<Vertex>> {
        let end_ok = |path: &[Vertex]| {
            let k = path.len();
            self.anchor(v).contains([path[k - 1], path[k - 2], path[k - 3]])
        };
        for start in &self.anchor(u).paths {
            let mut path = start.to_vec();
            if path.contains(&v) && path[2] != v {
                continue;
            }
            let (c1, c2) = (self.get(start[0], start[1]), self.get(start[1], start[2]));
            if c1 == c2 {
                continue;
            }
            if path[2] == v {
                if end_ok(&path) {
                    return Some(path);
                }
                continue;
            }
            let mut on_path = vec![false; self.graph.n()];
            path.iter().for_each(|&x| on_path[x] = true);
            if self.extend(&mut path, &mut on_path, v, (c1, c2), &end_ok) {
                return Some(path);
            }
        }
        None
    }

    fn extend(
        &self,
        path: &mut Vec<Vertex>,
        on_path: &mut [bool],
        target: Vertex,
        last: (Color, Color),
        end_ok: &dyn Fn(&[Vertex]) -> bool,
    ) -> bool {
        let x = *path.last().unwrap();
        for &(w, id) in self.graph.incident(x) {
            let c = self.colors[id];
            if c == 0 || !self.present[w] || on_path[w] || c == last.0 || c == last.1 {
                continue;
            }
            path.push(w);
            if w == target {
                if end_ok(path) {
                    return true;
                }
            } else {
                on_path[w] = true;
                if self.extend(path, on_path, target, (last.1, c), end_ok) {
                    return true;
                }
                on_path[w] = false;
            }
            path.pop();
        }
        false
    }

    /// Colors `ear = u u_2 … u_{p+1} v` given the anchored path from `u` to
    /// `v`, and installs anchor sets on its internal vertices.
    fn attach(&mut self, idx: usize, ear: &[Vertex], anchored: &[Vertex]) -> Result<String> {
        let p = ear.len() - 2;
        // 1-based names: at(1) = u, at(p + 2) = v.
        let at = |k: usize| ear[k - 1];
        let (u, v) = (at(1), at(p + 2));
        let (w1, w2) = (anchored[1], anchored[2]);
        let hops = self.anchor(v).first_hops();
        if hops.len() != 2 {
            return Err(Error::Invariant(format!(
                "ear {idx}: anchor set of {v} has {} first edges, expected 2",
                hops.len()
            )));
        }
        let (v1, v2) = (hops[0], hops[1]);
        let fv = self.anchor(v).colors(self.graph, &self.colors);
        let (a1, a2) = (self.get(v, v1), self.get(v, v2));
        let (cw1, cw2) = (self.get(u, w1), self.get(w1, w2));
        let equal = a1 == a2;
        let fail = |what: &str| {
            Error::Invariant(format!("ear {idx} (p = {p}): no admissible color for {what}"))
        };

        // edge[k] is the color of u_k u_{k+1}; walk[] lines up w2 w1 u P v.
        let mut edge = vec![0; p + 2];
        edge[p + 1] = lowest_avoiding(&fv).ok_or_else(|| fail("the edge at v"))?;
        let case;
        if p == 1 {
            edge[1] = if equal {
                lowest_avoiding(&[cw1, cw2])
            } else {
                lowest_among(&[edge[2], a1, a2], &[cw1, cw2])
            }
            .ok_or_else(|| fail("the edge at u"))?;
            case = format!("p = 1, {}", if equal { "equal" } else { "distinct" });
        } else {
            if equal {
                edge[p] = lowest_avoiding(&[edge[p + 1], a1]).ok_or_else(|| fail("the second edge from v"))?;
            } else if p == 2 {
                edge[1] = lowest_among(&[edge[3], a1, a2], &[cw1, cw2]).ok_or_else(|| fail("the edge at u"))?;
                edge[2] = lowest_avoiding(&[edge[3], a1, a2, edge[1], cw1])
                    .ok_or_else(|| fail("the middle edge"))?;
            } else {
                edge[p - 1] = lowest_among(&[a1, a2], &[cw1]).ok_or_else(|| fail("the third edge from v"))?;
                let mut avoid = vec![edge[p + 1], a1, a2, edge[p - 1]];
                if edge[p - 2] != 0 {
                    avoid.push(edge[p - 2]);
                }
                edge[p] = lowest_avoiding(&avoid).ok_or_else(|| fail("the second edge from v"))?;
            }
            // Walk w2 w1 u u_2 … v: positions 0, 1 are w2w1 and w1u, edge k
            // sits at position k + 1.
            let mut walk = vec![cw2, cw1];
            walk.extend_from_slice(&edge[1..]);
            #[allow(clippy::needless_range_loop)]
            for k in 1..=p + 1 {
                let pos = k + 1;
                if walk[pos] != 0 {
                    continue;
                }
                let avoid: Vec<Color> = (pos.saturating_sub(2)..=(pos + 2).min(walk.len() - 1))
                    .filter(|&q| q != pos)
                    .map(|q| walk[q])
                    .filter(|&c| c != 0)
                    .collect();
                walk[pos] = lowest_avoiding(&avoid).ok_or_else(|| fail("an inner ear edge"))?;
                edge[k] = walk[pos];
            }
            case = format!("p = {p}, {}", if equal { "equal" } else { "distinct" });
        }
        for (k, &c) in edge.iter().enumerate().take(p + 2).skip(1) {
            self.set(at(k), at(k + 1), c);
        }

        for k in 2..=p + 1 {
            self.present[at(k)] = true;
        }
        if p == 1 {
            self.anchors[at(2)] = Some(AnchorSet::new(vec![[at(2), u, w1], [at(2), v, v1], [at(2), v, v2]]));
        } else {
            self.anchors[at(2)] = Some(AnchorSet::new(vec![[at(2), u, w1], [at(2), at(3), at(4)]]));
            for k in 3..=p {
                self.anchors[at(k)] = Some(AnchorSet::new(vec![
                    [at(k), at(k - 1), at(k - 2)],
                    [at(k), at(k + 1), at(k + 2)],
                ]));
            }
            let last = at(p + 1);
            self.anchors[last] = Some(AnchorSet::new(vec![[last, at(p), at(p - 1)], [last, v, v1], [last, v, v2]]));
        }
        Ok(case)
    }

    /// Every anchor set spans at most four colors; returns the largest count.
    fn check_property_3(&self, ear: usize, case: &str) -> Result<usize> {
        let mut max = 0;
        for a in self.anchors.iter().flatten() {
            let k = a.colors(self.graph, &self.colors).len();
            if k > 4 {
                let at = if ear == usize::MAX { "the base cycle".to_string() } else { format!("ear {ear}") };
                return Err(Error::Invariant(format!(
                    "after {at} ({case}): anchor set of {} spans {k} colors",
                    a.end
                )));
            }
            max = max.max(k);
        }
        Ok(max)
    }
}
