use crate::graph::{DangerousSets, Graph};
use crate::params::{make_params, AlgoParams, Kappa, Mode, ParamError};
use crate::records::CycleCatalog;

/// A graph together with everything derived from it that a run needs:
/// parameters, dangerous sets and the cycle-catalog cache.
///
/// All of it is immutable apart from the internally synchronized catalog
/// cache, so one instance can back many concurrent runs.
#[derive(Debug)]
pub struct Instance {
    pub graph: Graph,
    pub params: AlgoParams,
    pub dangerous: DangerousSets,
    pub catalog: CycleCatalog,
}

impl Instance {
    /// Parameters for `delta = max(max_degree, 1)`.
    pub fn new(graph: Graph, kappa: Kappa, mode: Mode) -> Result<Self, ParamError> {
        let delta = graph.max_degree().max(1) as u64;
        let params = make_params(delta, kappa, mode)?;
        Self::with_params(graph, params)
    }

    /// Uses [`Kappa::default_for`] the graph's degree.
    pub fn with_default_kappa(graph: Graph, mode: Mode) -> Result<Self, ParamError> {
        let kappa = Kappa::default_for(graph.max_degree().max(1) as u64);
        Self::new(graph, kappa, mode)
    }

    pub fn with_params(graph: Graph, params: AlgoParams) -> Result<Self, ParamError> {
        let dangerous = DangerousSets::compute(&graph, params.delta, params.kappa)?;
        Ok(Self { graph, params, dangerous, catalog: CycleCatalog::new() })
    }
}
