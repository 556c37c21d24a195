use super::{GraphError, Presentation, Sign};

/// Mutable workspace for joining univalent vertices in pairs.
///
/// Welding keeps the cyclic orders at all trivalent vertices. In vertex-edge
/// form this reads: with `u, w` moved to the end of the vertex order and
/// their edges directed `x → u`, `y → w`, the welded graph is the remaining
/// order with a new edge `y → x`.
pub(crate) struct Gluing {
    valences: Vec<u8>,
    order: Vec<usize>,
    edges: Vec<Option<(usize, usize)>>,
    sign: Sign,
}

impl Gluing {
    pub(crate) fn new(p: &Presentation) -> Self {
        Self {
            valences: p.valences().to_vec(),
            order: (0..p.vertex_count()).collect(),
            edges: p.edges().iter().copied().map(Some).collect(),
            sign: Sign::Plus,
        }
    }

    fn incident_edge(&self, v: usize) -> usize {
        self.edges
            .iter()
            .position(|e| matches!(e, Some((a, b)) if *a == v || *b == v))
            .expect("univalent vertex has an edge")
    }

    fn move_to_end(&mut self, v: usize) {
        let pos = self.order.iter().position(|&x| x == v).expect("alive vertex");
        if (self.order.len() - 1 - pos) % 2 == 1 {
            self.sign = -self.sign;
        }
        self.order.remove(pos);
        self.order.push(v);
    }

    /// Joins univalent `u` and `w` into one edge. Returns `Ok(false)` when the
    /// join would create a self-loop, in which case the term vanishes and the
    /// workspace must be discarded.
    pub(crate) fn weld(&mut self, u: usize, w: usize) -> Result<bool, GraphError> {
        debug_assert!(self.valences[u] == 1 && self.valences[w] == 1 && u != w);
        let eu = self.incident_edge(u);
        let ew = self.incident_edge(w);
        if eu == ew {
            return Err(GraphError::VertexFreeLoop);
        }
        let (mut a, b) = self.edges[eu].unwrap();
        let x = if a == u { b } else { a };
        let (c, d) = self.edges[ew].unwrap();
        let y = if c == w { d } else { c };
        if x == y {
            return Ok(false);
        }
        if a == u {
            self.sign = -self.sign;
        }
        if c == w {
            self.sign = -self.sign;
        }
        self.move_to_end(u);
        self.move_to_end(w);
        self.order.truncate(self.order.len() - 2);
        a = y;
        self.edges[eu] = Some((a, x));
        self.edges[ew] = None;
        Ok(true)
    }

    pub(crate) fn finish(self) -> (Presentation, Sign) {
        let mut position = vec![usize::MAX; self.valences.len()];
        for (p, &v) in self.order.iter().enumerate() {
            position[v] = p;
        }
        let valences = self.order.iter().map(|&v| self.valences[v]).collect();
        let edges = self.edges.iter().flatten().map(|&(t, h)| (position[t], position[h])).collect();
        (Presentation::from_parts_unchecked(valences, edges), self.sign)
    }
}

#[cfg(test)]
mod tests {
    use super::super::{line, theta, wheel, SignState};
    use super::*;

    #[test]
    fn closing_w2_gives_plus_theta() {
        let w2 = wheel(2).unwrap();
        let mut g = Gluing::new(&w2);
        assert!(g.weld(2, 3).unwrap());
        let (p, s) = g.finish();
        let mut c = p.canonical();
        c.sign = c.sign * s;
        assert_eq!(c, theta().canonical());
        assert_eq!(c.sign, SignState::Plus);
    }

    #[test]
    fn welding_through_a_line_matches_direct_closure() {
        let w2 = wheel(2).unwrap();
        let both = w2.disjoint_union(&line());
        for (first, second) in [((2, 4), (3, 5)), ((2, 5), (3, 4))] {
            let mut g = Gluing::new(&both);
            assert!(g.weld(first.0, first.1).unwrap());
            assert!(g.weld(second.0, second.1).unwrap());
            let (p, s) = g.finish();
            let mut c = p.canonical();
            c.sign = c.sign * s;
            assert_eq!(c, theta().canonical());
        }
    }

    #[test]
    fn line_to_line_is_a_free_loop() {
        let mut g = Gluing::new(&line().disjoint_union(&line()));
        assert!(g.weld(0, 2).unwrap());
        assert_eq!(g.weld(1, 3), Err(GraphError::VertexFreeLoop));
    }
}
