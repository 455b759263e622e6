//! Cross-validation harness: every counting route and every bijection over a
//! grid of parameters.

use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use super::Budgets;
use crate::benzenoid::{build_benzenoid, enumerate_kekule, kekule_to_matrix, matrix_to_kekule};
use crate::error::{Error, Result};
use crate::exactcount::{count_kekule_closed, count_wim_closed, count_wim_lgv};
use crate::lattice::{enumerate_nonintersecting_tuples, matrix_to_path_tuple, path_tuple_to_matrix};
use crate::wim::{enumerate_wim, pulse_compose, pulse_decompose};

#[derive(Debug, Clone, Serialize)]
pub struct RouteResult {
    /// Exact count, or `None` when the route was skipped.
    pub count: Option<String>,
    pub elapsed_ms: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct WimCell {
    pub n: usize,
    pub k: usize,
    pub routes: BTreeMap<String, RouteResult>,
    /// Round trips checked, by bijection name; value is the number of
    /// matrices that came back unchanged.
    pub round_trips: BTreeMap<String, RouteResult>,
    pub agree: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct PqrCell {
    pub p: usize,
    pub q: usize,
    pub r: usize,
    pub routes: BTreeMap<String, RouteResult>,
    pub agree: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub cells: Vec<WimCell>,
    pub pqr_cells: Vec<PqrCell>,
    pub all_agree: bool,
}

#[derive(Debug, Clone, Copy)]
pub struct VerifyOptions {
    pub max_n: usize,
    pub max_k: usize,
    pub include_matchings: bool,
    pub max_pqr: Option<usize>,
    pub budgets: Budgets,
}

fn timed(f: impl FnOnce() -> Result<String>) -> (Result<String>, f64) {
    let t = Instant::now();
    let v = f();
    (v, t.elapsed().as_secs_f64() * 1e3)
}

/// Budget overruns skip a route; any other error is a failure.
fn record(f: impl FnOnce() -> Result<String>) -> (RouteResult, bool) {
    let (v, elapsed_ms) = timed(f);
    match v {
        Ok(c) => (
            RouteResult {
                count: Some(c),
                elapsed_ms,
                note: None,
            },
            true,
        ),
        Err(e @ Error::BudgetExceeded { .. }) => (
            RouteResult {
                count: None,
                elapsed_ms,
                note: Some(format!("skipped: {e}")),
            },
            true,
        ),
        Err(e) => (
            RouteResult {
                count: None,
                elapsed_ms,
                note: Some(format!("error: {e}")),
            },
            false,
        ),
    }
}

fn counts_agree(routes: &BTreeMap<String, RouteResult>) -> bool {
    let mut counts = routes.values().filter_map(|r| r.count.as_ref());
    match counts.next() {
        None => true,
        Some(first) => counts.all(|c| c == first),
    }
}

fn wim_cell(n: usize, k: usize, opts: &VerifyOptions) -> WimCell {
    let mut ok = true;
    let mut routes = BTreeMap::new();
    let mut put = |map: &mut BTreeMap<String, RouteResult>, name: &str, f: &dyn Fn() -> Result<String>| {
        let (res, good) = record(f);
        ok &= good;
        map.insert(name.to_string(), res);
    };
    put(&mut routes, "closed", &|| Ok(count_wim_closed(n, k)?.to_string()));
    put(&mut routes, "lgv", &|| Ok(count_wim_lgv(2, n, k)?.to_string()));
    put(&mut routes, "enumerate", &|| Ok(enumerate_wim(2, n, k)?.count().to_string()));
    put(&mut routes, "paths", &|| {
        Ok(enumerate_nonintersecting_tuples(2, n, k, opts.budgets.tuples)?.count().to_string())
    });
    let matchings = opts.include_matchings && k >= 2;
    if matchings {
        put(&mut routes, "kekule", &|| {
            let g = build_benzenoid(n, 2, k - 1)?;
            Ok(enumerate_kekule(&g, opts.budgets.edges)?.count().to_string())
        });
    }

    let mut round_trips = BTreeMap::new();
    put(&mut round_trips, "pulse", &|| {
        let mut c = 0usize;
        for m in enumerate_wim(2, n, k)? {
            if pulse_compose(&pulse_decompose(&m)?) != m {
                return Err(Error::Internal(format!("pulse round trip failed on {m:?}")));
            }
            c += 1;
        }
        Ok(c.to_string())
    });
    put(&mut round_trips, "paths", &|| {
        let mut c = 0usize;
        for m in enumerate_wim(2, n, k)? {
            if path_tuple_to_matrix(&matrix_to_path_tuple(&m)?)? != m {
                return Err(Error::Internal(format!("path round trip failed on {m:?}")));
            }
            c += 1;
        }
        Ok(c.to_string())
    });
    if matchings {
        put(&mut round_trips, "kekule", &|| {
            let g = build_benzenoid(n, 2, k - 1)?;
            let mut c = 0usize;
            for m in enumerate_wim(2, n, k)? {
                if kekule_to_matrix(&matrix_to_kekule(&m, &g)?)? != m {
                    return Err(Error::Internal(format!("kekule round trip failed on {m:?}")));
                }
                c += 1;
            }
            Ok(c.to_string())
        });
    }
    // every completed round trip must have covered the whole set
    let agree = ok && counts_agree(&routes) && {
        let closed = routes["closed"].count.clone();
        round_trips.values().all(|r| r.count.is_none() || r.count == closed)
    };
    WimCell {
        n,
        k,
        routes,
        round_trips,
        agree,
    }
}

fn pqr_cell(p: usize, q: usize, r: usize, opts: &VerifyOptions) -> PqrCell {
    let mut routes = BTreeMap::new();
    let (closed, ok1) = record(|| Ok(count_kekule_closed(p, q, r)?.to_string()));
    let (enumerated, ok2) = record(|| {
        let g = build_benzenoid(p, q, r)?;
        Ok(enumerate_kekule(&g, opts.budgets.edges)?.count().to_string())
    });
    routes.insert("closed".to_string(), closed);
    routes.insert("enumerate".to_string(), enumerated);
    let agree = ok1 && ok2 && counts_agree(&routes);
    PqrCell { p, q, r, routes, agree }
}

/// Runs every cell; cells are independent and evaluated in parallel.
pub fn run_verify(opts: &VerifyOptions) -> VerifyReport {
    let grid: Vec<(usize, usize)> = (1..=opts.max_n)
        .flat_map(|n| (1..=opts.max_k).map(move |k| (n, k)))
        .collect();
    let cells: Vec<WimCell> = grid.par_iter().map(|&(n, k)| wim_cell(n, k, opts)).collect();
    let pqr: Vec<(usize, usize, usize)> = match opts.max_pqr {
        None => Vec::new(),
        Some(mx) => (1..=mx)
            .flat_map(|p| (1..=mx).flat_map(move |q| (1..=mx).map(move |r| (p, q, r))))
            .collect(),
    };
    let pqr_cells: Vec<PqrCell> = pqr.par_iter().map(|&(p, q, r)| pqr_cell(p, q, r, opts)).collect();
    let all_agree = cells.iter().all(|c| c.agree) && pqr_cells.iter().all(|c| c.agree);
    VerifyReport {
        cells,
        pqr_cells,
        all_agree,
    }
}

fn fmt_routes(routes: &BTreeMap<String, RouteResult>) -> String {
    routes
        .iter()
        .map(|(name, r)| match &r.count {
            Some(c) => format!("{name}={c}"),
            None => format!("{name}=-"),
        })
        .collect::<Vec<_>>()
        .join(" ")
}

impl VerifyReport {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.cells {
            out.push_str(&format!(
                "n={} k={} {} | round trips: {} | {}\n",
                c.n,
                c.k,
                fmt_routes(&c.routes),
                fmt_routes(&c.round_trips),
                if c.agree { "ok" } else { "MISMATCH" }
            ));
        }
        for c in &self.pqr_cells {
            out.push_str(&format!(
                "O{{{},{},{}}} {} | {}\n",
                c.p,
                c.q,
                c.r,
                fmt_routes(&c.routes),
                if c.agree { "ok" } else { "MISMATCH" }
            ));
        }
        let failed = self.cells.iter().filter(|c| !c.agree).count() + self.pqr_cells.iter().filter(|c| !c.agree).count();
        out.push_str(&format!(
            "{} cells, {} disagreements: {}\n",
            self.cells.len() + self.pqr_cells.len(),
            failed,
            if self.all_agree { "all routes agree" } else { "FAILED" }
        ));
        out
    }
}
