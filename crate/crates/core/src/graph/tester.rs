//! Exact projector-based design tester for search and enumeration.

use super::{is_design_by_projectors, Certificate, Graph, ProjectorSystem, SpectrumSketch};
use crate::search::DesignTester;
use crate::Result;

/// Averages the eigenspaces `selected` (indices into the sketch) of `graph`.
#[derive(Clone, Debug)]
pub struct ProjectorTester {
    graph: Graph,
    sketch: SpectrumSketch,
    system: ProjectorSystem,
    description: String,
}

impl ProjectorTester {
    pub fn new(
        graph: Graph,
        sketch: SpectrumSketch,
        selected: &[usize],
        description: impl Into<String>,
    ) -> Result<Self> {
        let system = ProjectorSystem::new(&graph, &sketch, selected)?;
        Ok(ProjectorTester { graph, sketch, system, description: description.into() })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn sketch(&self) -> &SpectrumSketch {
        &self.sketch
    }

    pub fn system(&self) -> &ProjectorSystem {
        &self.system
    }
}

impl DesignTester for ProjectorTester {
    type State = Vec<i128>;

    fn vertex_count(&self) -> usize {
        self.graph.n()
    }

    fn describe(&self) -> String {
        self.description.clone()
    }

    fn empty_state(&self) -> Vec<i128> {
        self.system.empty_state()
    }

    fn push(&self, state: &mut Vec<i128>, v: usize) {
        self.system.add_vertex(state, v);
    }

    fn accepts(&self, state: &Vec<i128>, _size: usize) -> bool {
        self.system.state_vanishes(state)
    }

    fn certify(&self, subset: &[usize]) -> Result<Certificate> {
        is_design_by_projectors(&self.graph, &self.sketch, self.system.selected(), subset)
    }
}
