//! Name-based catalogue of every measure, with typed parameters and the
//! graph requirements checked before dispatch.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use crate::betweenness;
use crate::communicability;
use crate::decomposition::{self, Decomposition};
use crate::distance;
use crate::error::{CentralityError, Result};
use crate::flow;
use crate::geodesic::require_connected;
use crate::graph::queries::require_undirected;
use crate::graph::{self, DegreeMode, Graph};
use crate::gravity;
use crate::local;
use crate::score::ScoreVector;
use crate::seeds::{self, SeedOptions, SeedSet};
use crate::spectral::{self, HubbellWeights, IterationConfig};
use crate::vitality;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    Score,
    SeedSet,
    Decomposition,
}

impl Kind {
    pub fn name(self) -> &'static str {
        match self {
            Kind::Score => "score",
            Kind::SeedSet => "seedset",
            Kind::Decomposition => "decomposition",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParamType {
    Int,
    Real,
    Choice(&'static [&'static str]),
}

#[derive(Debug, Clone, Copy)]
pub struct ParamSpec {
    pub name: &'static str,
    pub ty: ParamType,
    /// `None` when the default depends on the graph.
    pub default: Option<&'static str>,
    /// Human-readable admissible range.
    pub range: &'static str,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Requirements {
    pub connected: bool,
    pub undirected: bool,
    pub unit_weights: bool,
}

impl Requirements {
    pub fn flags(&self) -> Vec<&'static str> {
        let mut v = Vec::new();
        if self.connected {
            v.push("connected");
        }
        if self.undirected {
            v.push("undirected");
        }
        if self.unit_weights {
            v.push("unit-weights");
        }
        v
    }
}

/// Result of running one measure.
#[derive(Debug, Clone)]
pub enum Outcome {
    Scores(ScoreVector),
    Seeds(SeedSet),
    Decomposition(Decomposition),
}

impl Outcome {
    /// Per-node scores for rank comparison; decompositions yield their cores.
    pub fn scores(&self) -> Option<ScoreVector> {
        match self {
            Outcome::Scores(sv) => Some(sv.clone()),
            Outcome::Decomposition(d) => Some(d.core_scores()),
            Outcome::Seeds(_) => None,
        }
    }

    pub fn warnings(&self) -> &[String] {
        match self {
            Outcome::Scores(sv) => &sv.warnings,
            Outcome::Seeds(s) => &s.warnings,
            Outcome::Decomposition(_) => &[],
        }
    }
}

type Runner = fn(&Graph, &Args) -> Result<Outcome>;

pub struct MeasureDescriptor {
    pub name: &'static str,
    pub aliases: &'static [&'static str],
    /// Measure family, used to group the listing.
    pub family: &'static str,
    pub summary: &'static str,
    pub params: &'static [ParamSpec],
    pub requires: Requirements,
    pub kind: Kind,
    /// Accepts `--normalize` / `--halve-undirected`.
    pub pair_sum: bool,
    run: Runner,
}

impl std::fmt::Debug for MeasureDescriptor {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("MeasureDescriptor")
            .field("name", &self.name)
            .field("kind", &self.kind)
            .finish_non_exhaustive()
    }
}

/// Parameters as given on the command line, before validation.
pub type RawParams = BTreeMap<String, String>;

/// Parses `key=value` tokens.
pub fn parse_params<S: AsRef<str>>(tokens: &[S]) -> Result<RawParams> {
    let mut out = RawParams::new();
    for t in tokens {
        let t = t.as_ref();
        let (k, v) = t.split_once('=').ok_or_else(|| {
            CentralityError::InvalidArgument(format!("parameter {t:?} is not of the form key=value"))
        })?;
        if out.insert(k.trim().to_string(), v.trim().to_string()).is_some() {
            return Err(CentralityError::InvalidArgument(format!(
                "parameter {k:?} given twice"
            )));
        }
    }
    Ok(out)
}

/// Validated parameter values for one run.
pub struct Args {
    values: BTreeMap<&'static str, String>,
}

impl Args {
    fn raw(&self, name: &str) -> Option<&str> {
        self.values.get(name).map(String::as_str)
    }

    fn real(&self, name: &str) -> Option<f64> {
        self.raw(name).map(|v| v.parse().expect("validated"))
    }

    fn int(&self, name: &str) -> Option<usize> {
        self.raw(name).map(|v| v.parse().expect("validated"))
    }

    fn req_real(&self, name: &str) -> f64 {
        self.real(name).expect("parameter has a default")
    }

    fn req_int(&self, name: &str) -> usize {
        self.int(name).expect("parameter has a default")
    }

    fn iteration(&self) -> IterationConfig {
        let d = IterationConfig::default();
        IterationConfig {
            tolerance: self.real("tolerance").unwrap_or(d.tolerance),
            max_iterations: self.int("max-iterations").unwrap_or(d.max_iterations),
        }
    }

    fn seeds(&self) -> SeedOptions {
        SeedOptions::new(self.req_int("k"))
    }
}

impl MeasureDescriptor {
    fn resolve(&self, raw: &RawParams) -> Result<Args> {
        let mut values = BTreeMap::new();
        for (k, v) in raw {
            let spec = self.params.iter().find(|p| p.name == k).ok_or_else(|| {
                let known: Vec<&str> = self.params.iter().map(|p| p.name).collect();
                CentralityError::InvalidArgument(format!(
                    "{} takes no parameter {k:?} (accepted: {})",
                    self.name,
                    if known.is_empty() { "none".to_string() } else { known.join(", ") }
                ))
            })?;
            let ok = match spec.ty {
                ParamType::Int => v.parse::<usize>().is_ok(),
                ParamType::Real => v.parse::<f64>().map(|x| !x.is_nan()).unwrap_or(false),
                ParamType::Choice(options) => options.contains(&v.as_str()),
            };
            if !ok {
                return Err(CentralityError::InvalidArgument(format!(
                    "{}: parameter {k} = {v:?} is not a valid {}",
                    self.name,
                    match spec.ty {
                        ParamType::Int => "non-negative integer".to_string(),
                        ParamType::Real => "real number".to_string(),
                        ParamType::Choice(o) => format!("choice among {}", o.join("|")),
                    }
                )));
            }
            values.insert(spec.name, v.clone());
        }
        for p in self.params {
            if let (Some(d), false) = (p.default, values.contains_key(p.name)) {
                values.insert(p.name, d.to_string());
            }
        }
        Ok(Args { values })
    }

    /// Verifies the declared requirements against `g`.
    pub fn check(&self, g: &Graph) -> Result<()> {
        if self.requires.undirected {
            require_undirected(g, self.name)?;
        }
        if self.requires.unit_weights && !g.has_unit_weights() {
            return Err(CentralityError::RequiresUnitWeights(self.name));
        }
        if self.requires.connected {
            require_connected(g, self.name)?;
        }
        Ok(())
    }

    /// Validates parameters and requirements, then runs the measure.
    pub fn run(&self, g: &Graph, raw: &RawParams) -> Result<Outcome> {
        let args = self.resolve(raw)?;
        self.check(g)?;
        let mut out = (self.run)(g, &args)?;
        let record = |params: &mut BTreeMap<String, String>| {
            for (k, v) in &args.values {
                params.entry(k.to_string()).or_insert_with(|| v.clone());
            }
        };
        match &mut out {
            Outcome::Scores(sv) => {
                sv.measure = self.name.to_string();
                record(&mut sv.params);
            }
            Outcome::Seeds(s) => {
                s.method = self.name.to_string();
                record(&mut s.params);
            }
            Outcome::Decomposition(_) => {}
        }
        Ok(out)
    }
}

const fn p(name: &'static str, ty: ParamType, default: Option<&'static str>, range: &'static str) -> ParamSpec {
    ParamSpec { name, ty, default, range }
}

const NONE: Requirements = Requirements { connected: false, undirected: false, unit_weights: false };
const CONNECTED: Requirements = Requirements { connected: true, undirected: false, unit_weights: false };
const UNDIRECTED: Requirements = Requirements { connected: false, undirected: true, unit_weights: false };
const CONNECTED_UNDIRECTED: Requirements = Requirements { connected: true, undirected: true, unit_weights: false };
const UNIT: Requirements = Requirements { connected: false, undirected: false, unit_weights: true };

const TOLERANCE: ParamSpec = p("tolerance", ParamType::Real, Some("1e-12"), "> 0");
const MAX_ITER: ParamSpec = p("max-iterations", ParamType::Int, Some("100000"), ">= 1");
const SEED_K: ParamSpec = p("k", ParamType::Int, Some("10"), ">= 1");
const ITERATIVE: &[ParamSpec] = &[TOLERANCE, MAX_ITER];

fn scores(sv: ScoreVector) -> Result<Outcome> {
    Ok(Outcome::Scores(sv))
}

macro_rules! measure {
    ($name:literal, [$($alias:literal),*], $family:literal, $summary:literal,
     $params:expr, $req:expr, $kind:expr, $pair:expr, $run:expr) => {
        MeasureDescriptor {
            name: $name,
            aliases: &[$($alias),*],
            family: $family,
            summary: $summary,
            params: {
                const PARAMS: &[ParamSpec] = $params;
                PARAMS
            },
            requires: $req,
            kind: $kind,
            pair_sum: $pair,
            run: $run,
        }
    };
}

fn build() -> Vec<MeasureDescriptor> {
    use Kind::Score as S;
    vec![
        // neighborhood and degree
        measure!("degree", ["degree-centrality"], "local", "size of the one-hop neighborhood",
            &[p("mode", ParamType::Choice(&["in", "out", "total"]), Some("total"), "in|out|total")],
            NONE, S, false,
            |g, a| {
                let mode = match a.raw("mode") {
                    Some("in") => DegreeMode::In,
                    Some("out") => DegreeMode::Out,
                    _ => DegreeMode::Total,
                };
                scores(graph::degree(g, mode))
            }),
        measure!("degree-mass", [], "local", "walk counts of length 1..m+1",
            &[p("m", ParamType::Int, Some("1"), ">= 0")], NONE, S, false,
            |g, a| scores(graph::degree_mass(g, a.req_int("m")))),
        measure!("clustering", ["local-clustering-coefficient", "clustering-coefficient"], "local",
            "fraction of neighbor pairs that are linked", &[], UNDIRECTED, S, false,
            |g, _| scores(graph::clustering_coefficient(g)?)),
        measure!("localrank", ["local-rank"], "local", "two-hop reach summed over neighbors of neighbors",
            &[], NONE, S, false, |g, _| scores(local::localrank(g))),
        measure!("clusterrank", ["cluster-rank"], "local", "neighbor degrees damped by clustering",
            &[], NONE, S, false, |g, _| scores(local::clusterrank(g))),
        measure!("leverage", [], "local", "degree relative to neighbor degrees",
            &[], NONE, S, false, |g, _| scores(local::leverage(g))),
        measure!("neighborhood-connectivity", ["average-neighbor-degree"], "local",
            "mean degree of the neighbors", &[], NONE, S, false,
            |g, _| scores(local::neighborhood_connectivity(g))),
        measure!("burt-constraint", ["constraint"], "local", "Burt's constraint on brokerage",
            &[], NONE, S, false, |g, _| scores(local::burt_constraint(g))),
        measure!("effective-size", ["borgatti-effective-size"], "local", "number of non-redundant contacts",
            &[], UNDIRECTED, S, false, |g, _| scores(local::effective_size(g)?)),
        measure!("redundancy", [], "local", "mean ties of a neighbor into the ego network",
            &[], NONE, S, false, |g, _| scores(local::redundancy(g))),
        // distance
        measure!("closeness", ["closeness-centrality"], "distance", "(N-1) over the distance sum",
            &[], CONNECTED, S, false, |g, _| scores(distance::closeness(g)?)),
        measure!("harmonic", ["latora-closeness", "harmonic-closeness"], "distance",
            "sum of reciprocal distances", &[], NONE, S, false, |g, _| scores(distance::harmonic(g))),
        measure!("eccentricity", ["harary-centrality", "eccentricity-centrality"], "distance",
            "reciprocal of the largest distance", &[], CONNECTED, S, false,
            |g, _| scores(distance::eccentricity(g)?)),
        measure!("lin", ["lin-index"], "distance", "squared reach over the distance sum",
            &[], NONE, S, false, |g, _| scores(distance::lin_index(g))),
        measure!("decay", ["decay-centrality"], "distance", "sum of delta^d",
            &[p("delta", ParamType::Real, Some("0.5"), "(0, 1)")], NONE, S, false,
            |g, a| scores(distance::decay(g, a.req_real("delta"))?)),
        measure!("radiality", ["integration"], "distance", "reversed distances relative to the diameter",
            &[], CONNECTED_UNDIRECTED, S, false, |g, _| scores(distance::radiality(g)?)),
        measure!("delta-closeness", [], "distance", "sum of d^-delta",
            &[p("delta", ParamType::Real, Some("0.5"), "finite; <= 0 needs a connected graph")],
            NONE, S, false, |g, a| scores(distance::delta_closeness(g, a.req_real("delta"))?)),
        measure!("p-means", ["p-means-closeness"], "distance", "generalized mean of distances to i",
            &[p("p", ParamType::Real, Some("-1"), "finite, non-zero")], CONNECTED, S, false,
            |g, a| scores(distance::p_means(g, a.req_real("p"))?)),
        measure!("m-reach", ["m-reach-centrality"], "distance", "nodes within m hops",
            &[p("m", ParamType::Int, Some("2"), ">= 1")], NONE, S, false,
            |g, a| scores(distance::m_reach(g, a.req_int("m"))?)),
        measure!("local-reaching", ["local-reaching-centrality"], "distance",
            "fraction of the other nodes reachable from i", &[], NONE, S, false,
            |g, _| scores(distance::local_reaching(g))),
        measure!("geodesic-k-path", ["k-path"], "distance", "geodesics of at most k hops starting at i",
            &[p("k", ParamType::Int, Some("3"), ">= 1")], UNIT, S, false,
            |g, a| scores(distance::geodesic_kpath(g, a.req_int("k"))?)),
        // betweenness
        measure!("betweenness", ["betweenness-centrality", "shortest-path-betweenness"], "betweenness",
            "fraction of geodesics through i", &[], NONE, S, true,
            |g, _| scores(betweenness::betweenness(g))),
        measure!("stress", ["stress-centrality"], "betweenness", "number of geodesics through i",
            &[], NONE, S, true, |g, _| scores(betweenness::stress(g))),
        measure!("k-betweenness", ["bounded-distance-betweenness", "range-limited-betweenness"],
            "betweenness", "betweenness over geodesics of at most k hops",
            &[p("k", ParamType::Int, Some("3"), ">= 1")], UNIT, S, true,
            |g, a| scores(betweenness::k_betweenness(g, a.req_int("k"))?)),
        measure!("length-scaled-betweenness", ["distance-scaled-betweenness"], "betweenness",
            "betweenness with pairs weighted by 1/d", &[], NONE, S, true,
            |g, _| scores(betweenness::length_scaled_betweenness(g))),
        measure!("endpoint-betweenness", [], "betweenness", "betweenness counting endpoints",
            &[], NONE, S, true, |g, _| scores(betweenness::endpoint_betweenness(g))),
        // spectral
        measure!("eigenvector", ["eigenvector-centrality"], "spectral", "dominant adjacency eigenvector",
            ITERATIVE, CONNECTED_UNDIRECTED, S, false,
            |g, a| scores(spectral::eigenvector_centrality(g, &a.iteration())?)),
        measure!("katz", ["katz-centrality"], "spectral",
            "attenuated walk counts; with beta, alpha-centrality",
            &[p("alpha", ParamType::Real, None, "(0, 1/lambda_max); default 0.9/lambda_max, 0.1 if directed"),
              p("beta", ParamType::Real, None, "exogenous scale, optional"), TOLERANCE, MAX_ITER],
            NONE, S, false,
            |g, a| {
                let cfg = a.iteration();
                let alpha = match a.real("alpha") {
                    Some(x) => x,
                    None if g.is_directed() => 0.1,
                    None => {
                        let lambda = spectral::spectral_radius(g, &cfg)?;
                        if lambda > 0.0 { 0.9 / lambda } else { 0.1 }
                    }
                };
                scores(spectral::katz(g, alpha, a.real("beta"), &cfg)?.with_param("alpha", alpha))
            }),
        measure!("pagerank", ["page-rank"], "spectral", "stationary random surfer with teleportation",
            &[p("alpha", ParamType::Real, Some("0.85"), "[0, 1)"), TOLERANCE, MAX_ITER], NONE, S, false,
            |g, a| scores(spectral::pagerank(g, a.req_real("alpha"), &a.iteration())?)),
        measure!("hits-hub", ["hub"], "spectral", "HITS hub score", ITERATIVE, NONE, S, false,
            |g, a| scores(spectral::hits(g, &a.iteration())?.0)),
        measure!("hits-authority", ["authority"], "spectral", "HITS authority score", ITERATIVE, NONE, S, false,
            |g, a| scores(spectral::hits(g, &a.iteration())?.1)),
        measure!("leaderrank", ["leader-rank"], "spectral", "PageRank-like walk through a ground node",
            ITERATIVE, NONE, S, false, |g, a| scores(spectral::leaderrank(g, &a.iteration())?)),
        measure!("hubbell", ["hubbell-index"], "spectral", "solution of c = E + W c",
            &[p("scale", ParamType::Real, None, "W = scale * A; default 1/(N-1)"), TOLERANCE, MAX_ITER],
            NONE, S, false,
            |g, a| {
                let w = match a.real("scale") {
                    Some(s) => HubbellWeights::ScaledAdjacency(s),
                    None => HubbellWeights::Default,
                };
                scores(spectral::hubbell(g, &w, None, &a.iteration())?)
            }),
        // communicability
        measure!("subgraph", ["subgraph-centrality", "estrada-index"], "communicability",
            "weighted closed walks, diag(e^A)", &[], UNDIRECTED, S, false,
            |g, _| scores(communicability::subgraph_centrality(g)?)),
        measure!("odd-subgraph", [], "communicability", "diag(sinh A)", &[], UNDIRECTED, S, false,
            |g, _| scores(communicability::odd_subgraph(g)?)),
        measure!("even-subgraph", [], "communicability", "diag(cosh A)", &[], UNDIRECTED, S, false,
            |g, _| scores(communicability::even_subgraph(g)?)),
        measure!("total-communicability", [], "communicability", "row sums of e^A", &[], UNDIRECTED, S, false,
            |g, _| scores(communicability::total_communicability(g)?)),
        measure!("resolvent", ["resolvent-centrality", "f-centrality"], "communicability",
            "diag((I - sA)^-1)",
            &[p("s", ParamType::Real, None, "(0, 1/lambda_max); default 1/(N-1)")], UNDIRECTED, S, false,
            |g, a| scores(communicability::resolvent_centrality(g, a.real("s"))?)),
        measure!("bipartivity", ["bipartivity-index"], "communicability",
            "even share of closed walks at i", &[], UNDIRECTED, S, false,
            |g, _| {
                let (global, sv) = communicability::bipartivity(g)?;
                scores(sv.with_param("global", format!("{global:.12}")))
            }),
        // decomposition
        measure!("k-shell", ["onion", "onion-decomposition", "coreness", "k-core"], "decomposition",
            "shell index and onion layer", &[], UNDIRECTED, Kind::Decomposition, false,
            |g, _| Ok(Outcome::Decomposition(decomposition::kshell(g)?))),
        measure!("mdd", ["mixed-degree-decomposition", "m-shell"], "decomposition",
            "shell index with removed links weighted by lambda",
            &[p("lambda", ParamType::Real, Some("0.7"), "[0, 1]")], UNDIRECTED, S, false,
            |g, a| scores(decomposition::mdd(g, a.req_real("lambda"))?)),
        measure!("k-truss", ["k-truss-index", "truss"], "decomposition", "largest truss containing i",
            &[], UNDIRECTED, S, false, |g, _| scores(decomposition::ktruss_index(g)?)),
        measure!("lobby", ["lobby-index", "l-index"], "decomposition", "h-index of neighbor degrees",
            &[], NONE, S, false, |g, _| scores(decomposition::lobby(g))),
        measure!("local-h-index", [], "decomposition", "sum of neighbor lobby indices",
            &[], NONE, S, false, |g, _| scores(decomposition::local_h_index(g))),
        measure!("ink", ["neighborhood-coreness", "improved-neighbors-k-core"], "decomposition",
            "sum of neighbor shell indices raised to alpha",
            &[p("alpha", ParamType::Real, Some("1"), ">= 0")], UNDIRECTED, S, false,
            |g, a| scores(decomposition::ink(g, a.req_real("alpha"))?)),
        measure!("extended-coreness", ["extended-neighborhood-coreness"], "decomposition",
            "two-hop sum of neighbor shells", &[], UNDIRECTED, S, false,
            |g, _| scores(decomposition::extended_coreness(g)?)),
        // gravity
        measure!("gravity", ["gravity-model"], "gravity", "degree products over squared distance",
            &[], UNDIRECTED, S, false, |g, _| scores(gravity::gravity_model(g)?)),
        measure!("local-gravity", ["local-gravity-model"], "gravity", "gravity within r hops",
            &[p("r", ParamType::Int, Some("3"), ">= 1")], UNDIRECTED, S, false,
            |g, a| scores(gravity::local_gravity(g, a.req_int("r"))?)),
        measure!("gravity-centrality", [], "gravity", "shell products within r hops",
            &[p("r", ParamType::Int, Some("3"), ">= 1")], UNDIRECTED, S, false,
            |g, a| scores(gravity::gravity_centrality(g, a.req_int("r"))?)),
        measure!("mixed-gravitational", ["improved-gravitational"], "gravity",
            "shell of i times the degrees of its neighbors", &[], UNDIRECTED, S, false,
            |g, _| scores(gravity::mixed_gravitational(g)?)),
        // seeds
        measure!("voterank", ["vote-rank"], "seeds", "iterative voting with attenuation",
            &[SEED_K], NONE, Kind::SeedSet, false,
            |g, a| Ok(Outcome::Seeds(seeds::voterank(g, &a.seeds())?))),
        measure!("wvoterank", ["weighted-voterank"], "seeds", "voting weighted by link strength",
            &[SEED_K], NONE, Kind::SeedSet, false,
            |g, a| Ok(Outcome::Seeds(seeds::wvoterank(g, &a.seeds())?))),
        measure!("degree-discount", ["degree-discount-ic", "degreediscountic"], "seeds",
            "degree discounted by chosen neighbors under independent cascade",
            &[SEED_K, p("p", ParamType::Real, Some("0.01"), "(0, 1]")], NONE, Kind::SeedSet, false,
            |g, a| Ok(Outcome::Seeds(seeds::degree_discount_ic(g, &a.seeds(), a.req_real("p"))?))),
        measure!("single-discount", ["singlediscount"], "seeds", "degree minus chosen neighbors",
            &[SEED_K], NONE, Kind::SeedSet, false,
            |g, a| Ok(Outcome::Seeds(seeds::single_discount(g, &a.seeds())?))),
        // vitality
        measure!("laplacian", ["laplacian-centrality"], "vitality", "relative drop in Laplacian energy",
            &[], UNDIRECTED, S, false, |g, _| scores(vitality::laplacian_centrality(g)?)),
        measure!("quasi-laplacian", ["quasi-laplacian-centrality"], "vitality",
            "drop in signless Laplacian energy", &[], UNDIRECTED, S, false,
            |g, _| scores(vitality::quasi_laplacian(g)?)),
        measure!("closeness-vitality", [], "vitality", "drop in the Wiener index",
            &[], CONNECTED, S, false, |g, _| scores(vitality::closeness_vitality(g)?)),
        measure!("efficiency", ["efficiency-centrality"], "vitality", "relative drop in global efficiency",
            &[], NONE, S, false, |g, _| scores(vitality::efficiency_centrality(g)?)),
        // electrical and random walk
        measure!("current-flow-closeness", ["information-centrality", "electrical-closeness"], "flow",
            "(N-1) over summed effective resistance", &[], CONNECTED_UNDIRECTED, S, false,
            |g, _| scores(flow::current_flow_closeness(g)?)),
        measure!("current-flow-betweenness", ["random-walk-betweenness"], "flow",
            "mean electrical throughflow", &[], CONNECTED_UNDIRECTED, S, false,
            |g, _| scores(flow::current_flow_betweenness(g)?)),
        measure!("markov", ["markov-centrality"], "flow", "inverse mean first-passage time into i",
            &[], CONNECTED, S, false, |g, _| scores(flow::markov_centrality(g)?)),
    ]
}

pub struct Registry {
    measures: Vec<MeasureDescriptor>,
    index: BTreeMap<&'static str, usize>,
}

impl Registry {
    fn new() -> Registry {
        let mut measures = build();
        measures.sort_by_key(|m| m.name);
        let mut index = BTreeMap::new();
        for (i, m) in measures.iter().enumerate() {
            for name in std::iter::once(&m.name).chain(m.aliases) {
                let prev = index.insert(*name, i);
                assert!(prev.is_none(), "measure name {name:?} registered twice");
            }
        }
        Registry { measures, index }
    }

    /// Descriptors in alphabetical order.
    pub fn list(&self) -> &[MeasureDescriptor] {
        &self.measures
    }

    pub fn get(&self, name: &str) -> Result<&MeasureDescriptor> {
        self.index
            .get(name.to_ascii_lowercase().as_str())
            .map(|&i| &self.measures[i])
            .ok_or_else(|| CentralityError::UnknownMeasure(name.to_string()))
    }

    pub fn run(&self, name: &str, g: &Graph, params: &RawParams) -> Result<Outcome> {
        self.get(name)?.run(g, params)
    }
}

pub fn registry() -> &'static Registry {
    static REGISTRY: OnceLock<Registry> = OnceLock::new();
    REGISTRY.get_or_init(Registry::new)
}
