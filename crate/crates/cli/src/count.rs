use std::io::Write;

use beergraph::enumeration::*;
use num_bigint::BigUint;
use rayon::prelude::*;

use crate::{Failed, Outcome, SeriesArg};

/// Weighted enumeration beyond this size fans out across threads.
const PARALLEL_ENUMERATION_N: usize = 10;

fn cbar_enumerated(n: usize) -> Option<BigUint> {
    if n > MAX_WEIGHTED_ENUMERATION_N {
        None
    } else if n < PARALLEL_ENUMERATION_N {
        cbar_by_enumeration(n).ok()
    } else {
        Some(DyckWords::new(n).par_bridge().map(|p| p.weight()).sum())
    }
}

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map_or_else(String::new, |v| v.to_string())
}

pub fn run(series: SeriesArg, max_n: usize, out: &mut dyn Write) -> Outcome {
    match series {
        SeriesArg::Cbar => {
            let s = weighted_series(max_n + 1);
            writeln!(out, "n,enumerated,recurrence,generating_function,ratio,reference")?;
            for n in 0..=max_n {
                let ratio = if n == 0 { String::new() } else { format!("{:.9}", s.growth(n - 1)) };
                writeln!(out, "{n},{},{},{},{ratio},{:.9}", opt(cbar_enumerated(n)), s.cbar[n], s.cbar_gf[n], growth_constant())?;
            }
        }
        SeriesArg::H => {
            let rec = h_by_recurrence(max_n);
            let last = h_by_last_part(max_n);
            writeln!(out, "k,enumerated,recurrence,last_part,closed_form,ratio,reference")?;
            for k in 1..=max_n {
                let enumerated = opt(h_by_enumeration(k).ok());
                let ratio = ratio(&rec[k], &rec[k - 1]);
                writeln!(out, "{k},{enumerated},{},{},{},{ratio:.9},{:.9}", rec[k], last[k], h_closed_form(k), h_growth_constant())?;
            }
        }
        SeriesArg::CatalanIdentity => {
            writeln!(out, "n,catalan,identity_sum,status")?;
            for n in 0..=max_n {
                let (c, sum) = (catalan(n + 1), catalan_identity_sum(n));
                writeln!(out, "{n},{c},{sum},{}", if c == sum { "pass" } else { "fail" })?;
            }
        }
        SeriesArg::Sxy => {
            if max_n > MAX_SXY_N {
                return Err(Failed::Usage(format!("sxy enumeration is limited to --max-n {MAX_SXY_N}")));
            }
            writeln!(out, "n,x,y,enumerated,formula,status")?;
            for n in 0..=max_n {
                for ((x, y), count) in sxy_enumerated(n)? {
                    let formula = sxy_formula(n, x, y);
                    writeln!(out, "{n},{x},{y},{count},{formula},{}", if BigUint::from(count) == formula { "pass" } else { "fail" })?;
                }
            }
        }
        SeriesArg::Bounds => {
            // census(n) weighs graphs on n + 1 vertices
            let s = weighted_series(max_n + 1);
            let refs = bound_constants();
            write!(out, "n,vertices,census,ratio,root,cbar_lower,cbar_upper")?;
            for (name, _) in refs {
                write!(out, ",ref_{name}")?;
            }
            writeln!(out)?;
            for row in trajectories(max_n) {
                let ratio = opt(row.ratio.map(|r| format!("{r:.9}")));
                write!(out, "{},{},{},{ratio},{:.9},{},{}", row.n, row.n + 1, row.census, row.root, s.cbar[row.n], s.cbar[row.n + 1])?;
                for (_, c) in refs {
                    write!(out, ",{c:.9}")?;
                }
                writeln!(out)?;
            }
        }
    }
    Ok(())
}
