use super::StateId;

/// Strongly connected components of a deterministic transition table,
/// in reverse topological order of the condensation.
pub struct SccInfo {
    /// Component id per state.
    pub comp_of: Vec<usize>,
    /// States per component.
    comps: Vec<Vec<StateId>>,
}

impl SccInfo {
    pub fn count(&self) -> usize {
        self.comps.len()
    }

    pub fn components(&self) -> impl Iterator<Item = &[StateId]> {
        self.comps.iter().map(|c| c.as_slice())
    }

    pub fn component(&self, id: usize) -> &[StateId] {
        &self.comps[id]
    }

    /// Whether the component can host a run forever (it contains a cycle).
    pub fn has_internal_edge(&self, comp: &[StateId], delta: &[Vec<StateId>]) -> bool {
        let id = self.comp_of[comp[0]];
        comp.iter()
            .any(|&s| delta[s].iter().any(|&t| self.comp_of[t] == id))
    }

    /// Per-component cycle flag, indexed by component id.
    pub fn settleable(&self, delta: &[Vec<StateId>]) -> Vec<bool> {
        (0..self.count())
            .map(|id| self.has_internal_edge(self.component(id), delta))
            .collect()
    }
}

/// Iterative Tarjan over `delta[s][a] = t` edges.
pub fn tarjan_scc(delta: &[Vec<StateId>]) -> SccInfo {
    let n = delta.len();
    let mut index = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut on_stack = vec![false; n];
    let mut stack: Vec<StateId> = Vec::new();
    let mut comp_of = vec![usize::MAX; n];
    let mut comps: Vec<Vec<StateId>> = Vec::new();
    let mut next = 0usize;

    // call stack entries: (state, next edge position)
    let mut call: Vec<(StateId, usize)> = Vec::new();
    for root in 0..n {
        if index[root] != usize::MAX {
            continue;
        }
        call.push((root, 0));
        index[root] = next;
        low[root] = next;
        next += 1;
        stack.push(root);
        on_stack[root] = true;

        while let Some(&mut (v, ref mut ei)) = call.last_mut() {
            if *ei < delta[v].len() {
                let w = delta[v][*ei];
                *ei += 1;
                if index[w] == usize::MAX {
                    index[w] = next;
                    low[w] = next;
                    next += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    call.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
            } else {
                call.pop();
                if let Some(&mut (u, _)) = call.last_mut() {
                    low[u] = low[u].min(low[v]);
                }
                if low[v] == index[v] {
                    let mut comp = Vec::new();
                    loop {
                        let w = stack.pop().unwrap();
                        on_stack[w] = false;
                        comp_of[w] = comps.len();
                        comp.push(w);
                        if w == v {
                            break;
                        }
                    }
                    comps.push(comp);
                }
            }
        }
    }
    SccInfo { comp_of, comps }
}
