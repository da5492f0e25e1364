//! Straightforward reference implementations, written from the definitions
//! with dense matrices, Floyd–Warshall and explicit path enumeration.

use czoo::Graph;
use nalgebra::{DMatrix, DVector, SymmetricEigen};

pub const INF: f64 = f64::INFINITY;

pub struct Dense {
    pub n: usize,
    pub directed: bool,
    /// a[i][j] = 1 for an edge i -> j.
    pub a: Vec<Vec<f64>>,
    /// Edge costs, INF where absent.
    pub w: Vec<Vec<f64>>,
}

impl Dense {
    pub fn of(g: &Graph) -> Dense {
        let n = g.node_count();
        let mut a = vec![vec![0.0; n]; n];
        let mut w = vec![vec![INF; n]; n];
        for (u, v, c) in g.edges() {
            a[u][v] = 1.0;
            w[u][v] = c;
            if !g.is_directed() {
                a[v][u] = 1.0;
                w[v][u] = c;
            }
        }
        Dense { n, directed: g.is_directed(), a, w }
    }

    pub fn out_deg(&self, i: usize) -> f64 {
        self.a[i].iter().sum()
    }

    pub fn in_deg(&self, i: usize) -> f64 {
        (0..self.n).map(|j| self.a[j][i]).sum()
    }

    pub fn nbrs(&self, i: usize) -> Vec<usize> {
        (0..self.n).filter(|&j| self.a[i][j] > 0.0).collect()
    }

    pub fn edges(&self) -> usize {
        let s: f64 = self.a.iter().flatten().sum();
        if self.directed { s as usize } else { s as usize / 2 }
    }

    pub fn matrix(&self) -> DMatrix<f64> {
        DMatrix::from_fn(self.n, self.n, |i, j| self.a[i][j])
    }

    fn floyd(&self, cost: impl Fn(usize, usize) -> f64) -> Vec<Vec<f64>> {
        let n = self.n;
        let mut d = vec![vec![INF; n]; n];
        for i in 0..n {
            d[i][i] = 0.0;
            for j in 0..n {
                if self.a[i][j] > 0.0 {
                    d[i][j] = cost(i, j);
                }
            }
        }
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    if d[i][k] + d[k][j] < d[i][j] {
                        d[i][j] = d[i][k] + d[k][j];
                    }
                }
            }
        }
        d
    }

    pub fn dist(&self) -> Vec<Vec<f64>> {
        self.floyd(|i, j| self.w[i][j])
    }

    pub fn hops(&self) -> Vec<Vec<f64>> {
        self.floyd(|_, _| 1.0)
    }

    /// Same graph without node `r` (indices kept; r has no edges and is ignored).
    pub fn without(&self, r: usize) -> Dense {
        let mut a = self.a.clone();
        let mut w = self.w.clone();
        for j in 0..self.n {
            a[r][j] = 0.0;
            a[j][r] = 0.0;
            w[r][j] = INF;
            w[j][r] = INF;
        }
        Dense { n: self.n, directed: self.directed, a, w }
    }
}

fn close_eq(a: f64, b: f64) -> bool {
    (a - b).abs() <= 1e-9 * (1.0 + a.abs().max(b.abs()))
}

/// For every ordered pair (s, t): the number of shortest paths and, per
/// node, the number of them passing through it as an interior node.
pub struct PathCounts {
    pub dist: Vec<Vec<f64>>,
    pub sigma: Vec<Vec<f64>>,
    pub through: Vec<Vec<Vec<f64>>>,
}

pub fn enumerate_paths(d: &Dense) -> PathCounts {
    let n = d.n;
    let dist = d.dist();
    let mut sigma = vec![vec![0.0; n]; n];
    let mut through = vec![vec![vec![0.0; n]; n]; n];
    fn walk(
        d: &Dense,
        dist: &[Vec<f64>],
        s: usize,
        t: usize,
        u: usize,
        path: &mut Vec<usize>,
        sigma: &mut f64,
        through: &mut [f64],
    ) {
        if u == t {
            *sigma += 1.0;
            for &v in &path[1..path.len() - 1] {
                through[v] += 1.0;
            }
            return;
        }
        for v in 0..d.n {
            if d.a[u][v] > 0.0
                && close_eq(dist[s][u] + d.w[u][v], dist[s][v])
                && close_eq(dist[s][v] + dist[v][t], dist[s][t])
            {
                path.push(v);
                walk(d, dist, s, t, v, path, sigma, through);
                path.pop();
            }
        }
    }
    for s in 0..n {
        for t in 0..n {
            if s != t && dist[s][t] < INF {
                let mut path = vec![s];
                let mut count = 0.0;
                walk(d, &dist, s, t, s, &mut path, &mut count, &mut through[s][t]);
                sigma[s][t] = count;
            }
        }
    }
    PathCounts { dist, sigma, through }
}

fn pair_sum(p: &PathCounts, keep: impl Fn(usize, usize) -> bool, f: impl Fn(f64, f64, f64) -> f64) -> Vec<f64> {
    let n = p.dist.len();
    let mut out = vec![0.0; n];
    for s in 0..n {
        for t in 0..n {
            if s == t || p.sigma[s][t] == 0.0 || !keep(s, t) {
                continue;
            }
            for v in 0..n {
                if v != s && v != t {
                    out[v] += f(p.through[s][t][v], p.sigma[s][t], p.dist[s][t]);
                }
            }
        }
    }
    out
}

pub fn betweenness(p: &PathCounts) -> Vec<f64> {
    pair_sum(p, |_, _| true, |x, s, _| x / s)
}

pub fn stress(p: &PathCounts) -> Vec<f64> {
    pair_sum(p, |_, _| true, |x, _, _| x)
}

pub fn k_betweenness(p: &PathCounts, k: usize) -> Vec<f64> {
    pair_sum(p, |s, t| p.dist[s][t] <= k as f64, |x, s, _| x / s)
}

pub fn length_scaled(p: &PathCounts) -> Vec<f64> {
    pair_sum(p, |_, _| true, |x, s, d| x / (s * d))
}

pub fn endpoint(p: &PathCounts) -> Vec<f64> {
    let n = p.dist.len();
    let mut b = betweenness(p);
    for s in 0..n {
        for t in 0..n {
            if s != t && p.dist[s][t] < INF {
                b[s] += 1.0;
                b[t] += 1.0;
            }
        }
    }
    b
}

// ---- distance family

pub fn closeness(d: &Dense) -> Vec<f64> {
    let dist = d.dist();
    (0..d.n).map(|i| (d.n - 1) as f64 / dist[i].iter().sum::<f64>()).collect()
}

pub fn harmonic(d: &Dense) -> Vec<f64> {
    let dist = d.dist();
    (0..d.n)
        .map(|i| (0..d.n).filter(|&j| j != i && dist[i][j] < INF).map(|j| 1.0 / dist[i][j]).sum())
        .collect()
}

pub fn eccentricity(d: &Dense) -> Vec<f64> {
    let dist = d.dist();
    (0..d.n).map(|i| 1.0 / dist[i].iter().cloned().fold(0.0, f64::max)).collect()
}

pub fn lin(d: &Dense) -> Vec<f64> {
    let dist = d.dist();
    (0..d.n)
        .map(|i| {
            let reach: Vec<f64> = (0..d.n).filter(|&j| j != i && dist[i][j] < INF).map(|j| dist[i][j]).collect();
            if reach.is_empty() {
                1.0
            } else {
                (reach.len() * reach.len()) as f64 / reach.iter().sum::<f64>()
            }
        })
        .collect()
}

pub fn decay(d: &Dense, delta: f64) -> Vec<f64> {
    let dist = d.dist();
    (0..d.n)
        .map(|i| (0..d.n).filter(|&j| j != i && dist[i][j] < INF).map(|j| delta.powf(dist[i][j])).sum())
        .collect()
}

pub fn radiality(d: &Dense) -> Vec<f64> {
    let dist = d.dist();
    let diam = dist.iter().flatten().cloned().fold(0.0, f64::max);
    let m = (d.n - 1) as f64;
    (0..d.n)
        .map(|i| (0..d.n).filter(|&j| j != i).map(|j| diam + 1.0 - dist[i][j]).sum::<f64>() / m)
        .collect()
}

pub fn delta_closeness(d: &Dense, delta: f64) -> Vec<f64> {
    let dist = d.dist();
    let m = (d.n - 1) as f64;
    (0..d.n)
        .map(|i| (0..d.n).filter(|&j| j != i && dist[i][j] < INF).map(|j| dist[i][j].powf(-delta)).sum::<f64>() / m)
        .collect()
}

/// Power mean of incoming distances d_ji, inverted.
pub fn p_means(d: &Dense, p: f64) -> Vec<f64> {
    let dist = d.dist();
    let m = (d.n - 1) as f64;
    (0..d.n)
        .map(|i| {
            let mean = (0..d.n).filter(|&j| j != i).map(|j| dist[j][i].powf(p)).sum::<f64>() / m;
            mean.powf(-1.0 / p)
        })
        .collect()
}

pub fn m_reach(d: &Dense, m: usize) -> Vec<f64> {
    let h = d.hops();
    (0..d.n).map(|i| (0..d.n).filter(|&j| j != i && h[i][j] <= m as f64).count() as f64).collect()
}

pub fn local_reaching(d: &Dense) -> Vec<f64> {
    let h = d.hops();
    (0..d.n)
        .map(|i| (0..d.n).filter(|&j| j != i && h[i][j] < INF).count() as f64 / (d.n - 1) as f64)
        .collect()
}

/// Σ_{j: d_ij ≤ k} σ_ij, with σ_ij = (A^{d_ij})_ij counted as walks.
pub fn geodesic_kpath(d: &Dense, k: usize) -> Vec<f64> {
    let h = d.hops();
    let a = d.matrix();
    let mut powers = vec![DMatrix::identity(d.n, d.n)];
    for r in 1..=k {
        let next = &powers[r - 1] * &a;
        powers.push(next);
    }
    (0..d.n)
        .map(|i| {
            (0..d.n)
                .filter(|&j| j != i && h[i][j] <= k as f64)
                .map(|j| powers[h[i][j] as usize][(i, j)])
                .sum()
        })
        .collect()
}

// ---- degree and neighborhood

pub fn degree(d: &Dense) -> Vec<f64> {
    (0..d.n)
        .map(|i| if d.directed { d.in_deg(i) + d.out_deg(i) } else { d.out_deg(i) })
        .collect()
}

pub fn degree_mass(d: &Dense, m: usize) -> Vec<f64> {
    let a = d.matrix();
    let ones = DVector::from_element(d.n, 1.0);
    let mut total = DVector::zeros(d.n);
    let mut power = DMatrix::identity(d.n, d.n);
    for _ in 0..=m {
        power = &power * &a;
        total += &power * &ones;
    }
    total.as_slice().to_vec()
}

fn triangles(d: &Dense, i: usize) -> f64 {
    let nb = d.nbrs(i);
    let mut t = 0.0;
    for (x, &a) in nb.iter().enumerate() {
        for &b in &nb[x + 1..] {
            t += d.a[a][b];
        }
    }
    t
}

pub fn clustering(d: &Dense) -> Vec<f64> {
    (0..d.n)
        .map(|i| {
            let k = d.out_deg(i);
            if k < 2.0 { 0.0 } else { 2.0 * triangles(d, i) / (k * (k - 1.0)) }
        })
        .collect()
}

pub fn localrank(d: &Dense) -> Vec<f64> {
    let h = d.hops();
    let reach: Vec<f64> = (0..d.n).map(|k| (0..d.n).filter(|&j| j != k && h[k][j] <= 2.0).count() as f64).collect();
    (0..d.n)
        .map(|i| d.nbrs(i).iter().map(|&j| d.nbrs(j).iter().map(|&k| reach[k]).sum::<f64>()).sum())
        .collect()
}

pub fn clusterrank(d: &Dense) -> Vec<f64> {
    let c = clustering(d);
    (0..d.n)
        .map(|i| 10f64.powf(-c[i]) * d.nbrs(i).iter().map(|&j| d.out_deg(j) + 1.0).sum::<f64>())
        .collect()
}

/// NaN marks an undefined entry.
pub fn leverage(d: &Dense) -> Vec<f64> {
    (0..d.n)
        .map(|i| {
            let di = d.out_deg(i);
            if di == 0.0 {
                return f64::NAN;
            }
            d.nbrs(i).iter().map(|&j| (di - d.out_deg(j)) / (di + d.out_deg(j))).sum::<f64>() / di
        })
        .collect()
}

pub fn neighborhood_connectivity(d: &Dense) -> Vec<f64> {
    (0..d.n)
        .map(|i| {
            let di = d.out_deg(i);
            if di == 0.0 { 0.0 } else { d.nbrs(i).iter().map(|&j| d.out_deg(j)).sum::<f64>() / di }
        })
        .collect()
}

/// Burt's constraint with p_ij = a_ij / Σ_k a_ik, summing indirect terms
/// over every third node q.
pub fn burt(d: &Dense) -> Vec<f64> {
    let p = |i: usize, j: usize| {
        let s = d.out_deg(i);
        if s == 0.0 { 0.0 } else { d.a[i][j] / s }
    };
    (0..d.n)
        .map(|i| {
            if d.out_deg(i) == 0.0 {
                return f64::NAN;
            }
            d.nbrs(i)
                .iter()
                .map(|&j| {
                    let indirect: f64 = (0..d.n).filter(|&q| q != i && q != j).map(|q| p(i, q) * p(q, j)).sum();
                    (p(i, j) + indirect).powi(2)
                })
                .sum()
        })
        .collect()
}

/// Burt's effective size, Σ_j [1 − Σ_q p_iq m_jq], m_jq = a_jq / max_k a_jk.
pub fn effective_size(d: &Dense) -> Vec<f64> {
    (0..d.n)
        .map(|i| {
            let di = d.out_deg(i);
            if di == 0.0 {
                return 0.0;
            }
            d.nbrs(i)
                .iter()
                .map(|&j| {
                    let mx = d.a[j].iter().cloned().fold(0.0, f64::max);
                    1.0 - (0..d.n)
                        .filter(|&q| q != i && q != j)
                        .map(|q| d.a[i][q] / di * d.a[j][q] / mx)
                        .sum::<f64>()
                })
                .sum()
        })
        .collect()
}

pub fn redundancy(d: &Dense) -> Vec<f64> {
    let c = clustering(d);
    (0..d.n).map(|i| if d.out_deg(i) <= 1.0 { 0.0 } else { c[i] * (d.out_deg(i) - 1.0) }).collect()
}

// ---- spectral

pub fn spectrum(d: &Dense) -> SymmetricEigen<f64, nalgebra::Dyn> {
    SymmetricEigen::new(d.matrix())
}

pub fn lambda_max(d: &Dense) -> f64 {
    spectrum(d).eigenvalues.iter().cloned().fold(f64::NEG_INFINITY, f64::max)
}

fn principal(m: DMatrix<f64>) -> Vec<f64> {
    let e = SymmetricEigen::new(m);
    let k = (0..e.eigenvalues.len()).max_by(|&a, &b| e.eigenvalues[a].total_cmp(&e.eigenvalues[b])).unwrap();
    let mut v: Vec<f64> = e.eigenvectors.column(k).iter().cloned().collect();
    let s: f64 = v.iter().sum();
    let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
    for x in v.iter_mut() {
        *x *= s.signum() / norm;
    }
    v
}

pub fn eigenvector(d: &Dense) -> Vec<f64> {
    principal(d.matrix())
}

pub fn hits(d: &Dense) -> (Vec<f64>, Vec<f64>) {
    let a = d.matrix();
    (principal(&a * a.transpose()), principal(a.transpose() * &a))
}

/// Σ_{k≥1} α^k A^k 1 = (I − αA)^{-1} 1 − 1.
pub fn katz(d: &Dense, alpha: f64) -> Vec<f64> {
    let m = DMatrix::identity(d.n, d.n) - d.matrix() * alpha;
    let x = m.lu().solve(&DVector::from_element(d.n, 1.0)).unwrap();
    x.iter().map(|v| v - 1.0).collect()
}

pub fn pagerank(d: &Dense, alpha: f64) -> Vec<f64> {
    let n = d.n;
    // Column-stochastic transition with dangling columns spread uniformly.
    let m = DMatrix::from_fn(n, n, |i, j| {
        let out = d.out_deg(j);
        if out == 0.0 { 1.0 / n as f64 } else { d.a[j][i] / out }
    });
    let lhs = DMatrix::identity(n, n) - m * alpha;
    let rhs = DVector::from_element(n, (1.0 - alpha) / n as f64);
    lhs.lu().solve(&rhs).unwrap().as_slice().to_vec()
}

/// Stationary mass (total N) of the walk with a ground node, scored as own
/// mass plus an even share of the ground node's.
pub fn leaderrank(d: &Dense) -> Vec<f64> {
    let n = d.n;
    let size = n + 1;
    let mut p = DMatrix::zeros(size, size);
    for i in 0..n {
        let out = d.out_deg(i) + 1.0;
        for j in 0..n {
            p[(i, j)] = d.a[i][j] / out;
        }
        p[(i, n)] = 1.0 / out;
        p[(n, i)] = 1.0 / n as f64;
    }
    let mut lhs = DMatrix::identity(size, size) - p.transpose();
    lhs.row_mut(n).fill(1.0);
    let mut rhs = DVector::zeros(size);
    rhs[n] = n as f64;
    let pi = lhs.lu().solve(&rhs).unwrap();
    (0..n).map(|i| pi[i] + pi[n] / n as f64).collect()
}

pub fn hubbell(d: &Dense) -> Vec<f64> {
    let scale = 1.0 / (d.n.max(2) - 1) as f64;
    let lhs = DMatrix::identity(d.n, d.n) - d.matrix() * scale;
    lhs.lu().solve(&DVector::from_element(d.n, 1.0)).unwrap().as_slice().to_vec()
}

// ---- communicability, by power series

/// (Σ even terms, Σ odd terms) of the exponential series of A.
pub fn exp_series(d: &Dense) -> (DMatrix<f64>, DMatrix<f64>) {
    let a = d.matrix();
    let mut term = DMatrix::identity(d.n, d.n);
    let mut even = term.clone();
    let mut odd = DMatrix::zeros(d.n, d.n);
    for k in 1..400 {
        term = &term * &a / k as f64;
        if k % 2 == 0 {
            even += &term;
        } else {
            odd += &term;
        }
        let scale = even.amax().max(1.0);
        if term.amax() < 1e-18 * scale && k > 10 {
            break;
        }
    }
    (even, odd)
}

pub fn subgraph(d: &Dense) -> Vec<f64> {
    let (e, o) = exp_series(d);
    (0..d.n).map(|i| e[(i, i)] + o[(i, i)]).collect()
}

pub fn odd_subgraph(d: &Dense) -> Vec<f64> {
    let (_, o) = exp_series(d);
    (0..d.n).map(|i| o[(i, i)]).collect()
}

pub fn even_subgraph(d: &Dense) -> Vec<f64> {
    let (e, _) = exp_series(d);
    (0..d.n).map(|i| e[(i, i)]).collect()
}

pub fn total_communicability(d: &Dense) -> Vec<f64> {
    let (e, o) = exp_series(d);
    let x = e + o;
    (0..d.n).map(|i| x.row(i).sum()).collect()
}

pub fn resolvent(d: &Dense, s: f64) -> Vec<f64> {
    let m = (DMatrix::identity(d.n, d.n) - d.matrix() * s).try_inverse().unwrap();
    (0..d.n).map(|i| m[(i, i)]).collect()
}

pub fn bipartivity(d: &Dense) -> (f64, Vec<f64>) {
    let (e, o) = exp_series(d);
    let global = e.trace() / (e.trace() + o.trace());
    (global, (0..d.n).map(|i| e[(i, i)] / (e[(i, i)] + o[(i, i)])).collect())
}

// ---- decompositions

/// Core index by definition: the largest k whose k-core (repeatedly delete
/// nodes of degree < k) still contains the node.
pub fn core_numbers(d: &Dense) -> Vec<usize> {
    let n = d.n;
    let mut core = vec![0; n];
    for k in 1..=n {
        let mut alive = vec![true; n];
        loop {
            let drop: Vec<usize> = (0..n)
                .filter(|&i| alive[i] && (0..n).filter(|&j| alive[j] && d.a[i][j] > 0.0).count() < k)
                .collect();
            if drop.is_empty() {
                break;
            }
            for i in drop {
                alive[i] = false;
            }
        }
        for i in 0..n {
            if alive[i] {
                core[i] = k;
            }
        }
    }
    core
}

/// Onion layers: each round removes every node whose residual degree is at
/// most the current shell value, which rises to the minimum residual degree
/// when no node qualifies.
pub fn onion_layers(d: &Dense) -> Vec<usize> {
    let n = d.n;
    let mut alive = vec![true; n];
    let mut layer = vec![0; n];
    let mut k = 0;
    let mut round = 0;
    while alive.iter().any(|&a| a) {
        let deg = |i: usize, alive: &[bool]| (0..n).filter(|&j| alive[j] && d.a[i][j] > 0.0).count();
        let mut drop: Vec<usize> = (0..n).filter(|&i| alive[i] && deg(i, &alive) <= k).collect();
        if drop.is_empty() {
            k = (0..n).filter(|&i| alive[i]).map(|i| deg(i, &alive)).min().unwrap();
            drop = (0..n).filter(|&i| alive[i] && deg(i, &alive) <= k).collect();
        }
        round += 1;
        for i in drop {
            alive[i] = false;
            layer[i] = round;
        }
    }
    layer
}

/// Mixed-degree shells by repeated full recomputation of d_r + λ d_e.
pub fn mdd(d: &Dense, lambda: f64) -> Vec<f64> {
    let n = d.n;
    let mut alive = vec![true; n];
    let mut shell = vec![0.0; n];
    let mut k = f64::NEG_INFINITY;
    while alive.iter().any(|&a| a) {
        let mixed: Vec<f64> = (0..n)
            .map(|i| {
                let r = (0..n).filter(|&j| alive[j] && d.a[i][j] > 0.0).count() as f64;
                let e = (0..n).filter(|&j| !alive[j] && d.a[i][j] > 0.0).count() as f64;
                r + lambda * e
            })
            .collect();
        let mut drop: Vec<usize> = (0..n).filter(|&i| alive[i] && mixed[i] <= k + 1e-12).collect();
        if drop.is_empty() {
            k = (0..n).filter(|&i| alive[i]).map(|i| mixed[i]).fold(INF, f64::min);
            drop = (0..n).filter(|&i| alive[i] && mixed[i] <= k + 1e-12).collect();
        }
        for i in drop {
            alive[i] = false;
            shell[i] = k;
        }
    }
    shell
}

/// Largest k such that some incident edge survives in the k-truss
/// (edges repeatedly deleted while in fewer than k − 2 triangles).
pub fn ktruss(d: &Dense) -> Vec<f64> {
    let n = d.n;
    let mut best = vec![0.0; n];
    for k in 2..=n + 1 {
        let mut e = d.a.clone();
        loop {
            let mut changed = false;
            for u in 0..n {
                for v in u + 1..n {
                    if e[u][v] > 0.0 {
                        let support = (0..n).filter(|&w| e[u][w] > 0.0 && e[v][w] > 0.0).count();
                        if support + 2 < k {
                            e[u][v] = 0.0;
                            e[v][u] = 0.0;
                            changed = true;
                        }
                    }
                }
            }
            if !changed {
                break;
            }
        }
        for u in 0..n {
            if e[u].iter().any(|&x| x > 0.0) {
                best[u] = k as f64;
            }
        }
    }
    best
}

pub fn lobby_values(d: &Dense) -> Vec<f64> {
    (0..d.n)
        .map(|i| {
            let degs: Vec<f64> = d.nbrs(i).iter().map(|&j| d.out_deg(j)).collect();
            (0..=degs.len()).filter(|&k| degs.iter().filter(|&&x| x >= k as f64).count() >= k).max().unwrap() as f64
        })
        .collect()
}

pub fn local_h(d: &Dense) -> Vec<f64> {
    let h = lobby_values(d);
    (0..d.n).map(|i| h[i] + d.nbrs(i).iter().map(|&j| h[j]).sum::<f64>()).collect()
}

pub fn ink(d: &Dense, alpha: f64) -> Vec<f64> {
    let c = core_numbers(d);
    (0..d.n).map(|i| d.nbrs(i).iter().map(|&j| (c[j] as f64).powf(alpha)).sum()).collect()
}

pub fn extended_coreness(d: &Dense) -> Vec<f64> {
    let inner = ink(d, 1.0);
    (0..d.n).map(|i| d.nbrs(i).iter().map(|&j| inner[j]).sum()).collect()
}

// ---- gravity

pub fn gravity_with(d: &Dense, own: &[f64], other: &[f64], radius: f64) -> Vec<f64> {
    let h = d.hops();
    (0..d.n)
        .map(|i| {
            (0..d.n)
                .filter(|&j| j != i && h[i][j] <= radius)
                .map(|j| own[i] * other[j] / (h[i][j] * h[i][j]))
                .sum()
        })
        .collect()
}

pub fn gravity(d: &Dense, radius: f64) -> Vec<f64> {
    let deg = degree(d);
    gravity_with(d, &deg, &deg, radius)
}

pub fn gravity_centrality(d: &Dense, radius: f64) -> Vec<f64> {
    let c: Vec<f64> = core_numbers(d).iter().map(|&x| x as f64).collect();
    gravity_with(d, &c, &c, radius)
}

pub fn mixed_gravitational(d: &Dense) -> Vec<f64> {
    let c: Vec<f64> = core_numbers(d).iter().map(|&x| x as f64).collect();
    gravity_with(d, &c, &degree(d), 1.0)
}

// ---- seeds

fn pick(scores: &[f64], chosen: &[bool]) -> usize {
    let mut best = usize::MAX;
    for i in 0..scores.len() {
        if !chosen[i] && (best == usize::MAX || scores[i] > scores[best]) {
            best = i;
        }
    }
    best
}

fn vote(d: &Dense, k: usize, weighted: bool) -> Vec<(usize, f64)> {
    let n = d.n;
    let mean = if d.directed { d.edges() as f64 / n as f64 } else { 2.0 * d.edges() as f64 / n as f64 };
    let f = if mean > 0.0 { 1.0 / mean } else { 0.0 };
    let mut ability = vec![1.0; n];
    let mut chosen = vec![false; n];
    let mut out = Vec::new();
    for _ in 0..k.min(n) {
        let scores: Vec<f64> = (0..n)
            .map(|i| {
                let received: f64 = (0..n).map(|j| d.a[j][i] * if weighted { d.w[j][i].min(1e300) } else { 1.0 } * ability[j]).sum();
                if weighted { (d.in_deg(i) * received).sqrt() } else { received }
            })
            .collect();
        let b = pick(&scores, &chosen);
        chosen[b] = true;
        out.push((b, scores[b]));
        ability[b] = 0.0;
        for j in 0..n {
            if d.a[j][b] > 0.0 {
                ability[j] = f64::max(0.0, ability[j] - f);
            }
        }
    }
    out
}

pub fn voterank(d: &Dense, k: usize) -> Vec<(usize, f64)> {
    vote(d, k, false)
}

pub fn wvoterank(d: &Dense, k: usize) -> Vec<(usize, f64)> {
    vote(d, k, true)
}

pub fn degree_discount(d: &Dense, k: usize, p: f64) -> Vec<(usize, f64)> {
    let n = d.n;
    let mut chosen = vec![false; n];
    let mut out = Vec::new();
    for _ in 0..k.min(n) {
        let scores: Vec<f64> = (0..n)
            .map(|v| {
                let dv = d.out_deg(v);
                let t = d.nbrs(v).iter().filter(|&&u| chosen[u]).count() as f64;
                if t == 0.0 { dv } else { dv - 2.0 * t - (dv - t) * t * p }
            })
            .collect();
        let b = pick(&scores, &chosen);
        chosen[b] = true;
        out.push((b, scores[b]));
    }
    out
}

pub fn single_discount(d: &Dense, k: usize) -> Vec<(usize, f64)> {
    let n = d.n;
    let mut chosen = vec![false; n];
    let mut out = Vec::new();
    for _ in 0..k.min(n) {
        let scores: Vec<f64> = (0..n)
            .map(|v| d.out_deg(v) - d.nbrs(v).iter().filter(|&&u| chosen[u]).count() as f64)
            .collect();
        let b = pick(&scores, &chosen);
        chosen[b] = true;
        out.push((b, scores[b]));
    }
    out
}

// ---- vitality

fn energy(m: DMatrix<f64>) -> f64 {
    SymmetricEigen::new(m).eigenvalues.iter().map(|l| l * l).sum()
}

fn laplacian_matrix(d: &Dense, signless: bool) -> DMatrix<f64> {
    let n = d.n;
    DMatrix::from_fn(n, n, |i, j| {
        let wij = if d.a[i][j] > 0.0 { d.w[i][j] } else { 0.0 };
        if i == j {
            (0..n).filter(|&k| d.a[i][k] > 0.0).map(|k| d.w[i][k]).sum()
        } else if signless {
            wij
        } else {
            -wij
        }
    })
}

pub fn laplacian_energy(d: &Dense) -> f64 {
    energy(laplacian_matrix(d, false))
}

pub fn laplacian_centrality(d: &Dense) -> Vec<f64> {
    let total = laplacian_energy(d);
    (0..d.n).map(|i| (total - laplacian_energy(&d.without(i))) / total).collect()
}

/// Removal definition with signless Laplacian energies, unweighted.
pub fn quasi_laplacian(d: &Dense) -> Vec<f64> {
    let unit = |g: &Dense| Dense {
        n: g.n,
        directed: false,
        a: g.a.clone(),
        w: g.a.iter().map(|r| r.iter().map(|&x| if x > 0.0 { 1.0 } else { INF }).collect()).collect(),
    };
    let total = energy(laplacian_matrix(&unit(d), true));
    (0..d.n).map(|i| total - energy(laplacian_matrix(&unit(&d.without(i)), true))).collect()
}

/// W(G) − W(G − i); −inf when G − i is disconnected.
pub fn closeness_vitality(d: &Dense) -> Vec<f64> {
    let wiener = |g: &Dense, skip: Option<usize>| -> f64 {
        let dist = g.dist();
        let mut s = 0.0;
        for a in 0..g.n {
            for b in 0..g.n {
                if a != b && Some(a) != skip && Some(b) != skip {
                    s += dist[a][b];
                }
            }
        }
        s
    };
    let whole = wiener(d, None);
    (0..d.n)
        .map(|i| {
            let rest = wiener(&d.without(i), Some(i));
            if rest.is_infinite() { f64::NEG_INFINITY } else { whole - rest }
        })
        .collect()
}

pub fn efficiency(d: &Dense) -> Vec<f64> {
    let eff = |g: &Dense, skip: Option<usize>| -> f64 {
        let dist = g.dist();
        let alive: Vec<usize> = (0..g.n).filter(|&a| Some(a) != skip).collect();
        let m = alive.len() as f64;
        if m < 2.0 {
            return 0.0;
        }
        let mut s = 0.0;
        for &a in &alive {
            for &b in &alive {
                if a != b && dist[a][b] < INF {
                    s += 1.0 / dist[a][b];
                }
            }
        }
        s / (m * (m - 1.0))
    };
    let whole = eff(d, None);
    (0..d.n).map(|i| (whole - eff(&d.without(i), Some(i))) / whole).collect()
}

// ---- electrical and random walk

/// Moore–Penrose pseudoinverse of the conductance Laplacian via eigenpairs.
pub fn laplacian_pinv(d: &Dense) -> DMatrix<f64> {
    let n = d.n;
    let l = DMatrix::from_fn(n, n, |i, j| {
        if i == j {
            (0..n).filter(|&k| d.a[i][k] > 0.0).map(|k| 1.0 / d.w[i][k]).sum()
        } else if d.a[i][j] > 0.0 {
            -1.0 / d.w[i][j]
        } else {
            0.0
        }
    });
    let e = SymmetricEigen::new(l);
    let mut pinv = DMatrix::zeros(n, n);
    for k in 0..n {
        let lam = e.eigenvalues[k];
        if lam.abs() > 1e-9 {
            let v = e.eigenvectors.column(k);
            pinv += (v * v.transpose()) / lam;
        }
    }
    pinv
}

pub fn resistance(d: &Dense) -> Vec<Vec<f64>> {
    let p = laplacian_pinv(d);
    (0..d.n).map(|i| (0..d.n).map(|j| p[(i, i)] + p[(j, j)] - 2.0 * p[(i, j)]).collect()).collect()
}

pub fn current_flow_closeness(d: &Dense) -> Vec<f64> {
    let r = resistance(d);
    (0..d.n).map(|i| (d.n - 1) as f64 / r[i].iter().sum::<f64>()).collect()
}

/// Throughflow per ordered pair from explicit potentials; endpoints get 1.
pub fn current_flow_betweenness(d: &Dense) -> Vec<f64> {
    let n = d.n;
    let p = laplacian_pinv(d);
    let mut out = vec![0.0; n];
    for s in 0..n {
        for t in 0..n {
            if s == t {
                continue;
            }
            let pot: Vec<f64> = (0..n).map(|v| p[(v, s)] - p[(v, t)]).collect();
            for v in 0..n {
                if v == s || v == t {
                    out[v] += 1.0;
                } else {
                    out[v] += 0.5
                        * (0..n)
                            .filter(|&u| d.a[v][u] > 0.0)
                            .map(|u| (pot[v] - pot[u]).abs() / d.w[v][u])
                            .sum::<f64>();
                }
            }
        }
    }
    out.iter().map(|x| x / (n * (n - 1)) as f64).collect()
}

/// MFPT into each target by solving the absorbing chain.
pub fn markov(d: &Dense) -> Vec<f64> {
    let n = d.n;
    let p = |i: usize, j: usize| {
        let row: f64 = (0..n).filter(|&k| d.a[i][k] > 0.0).map(|k| 1.0 / d.w[i][k]).sum();
        if d.a[i][j] > 0.0 { 1.0 / d.w[i][j] / row } else { 0.0 }
    };
    (0..n)
        .map(|target| {
            let others: Vec<usize> = (0..n).filter(|&j| j != target).collect();
            let m = others.len();
            let lhs = DMatrix::from_fn(m, m, |a, b| {
                let id = if a == b { 1.0 } else { 0.0 };
                id - p(others[a], others[b])
            });
            let times = lhs.lu().solve(&DVector::from_element(m, 1.0)).unwrap();
            m as f64 / times.sum()
        })
        .collect()
}
