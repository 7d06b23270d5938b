use std::fmt::Write;

use aci_core::closed_form::reduced_gb;
use aci_core::hilbert::{hs_complete_intersection, socle_degrees};
use aci_core::initial::{crit_sets, hs_quotient, minimal_generators_ranked};
use aci_core::json::{BasisJson, CritJson};
use aci_core::oracle::{aci_generators, buchberger, multiplication_rank, OracleConfig};
use aci_core::paths::{monomial_to_path, RedLine};
use aci_core::render::{basis_m2, basis_text, render_ascii, render_svg};
use aci_core::sequences::{
    catalan_row, gb_degree_sequence, motzkin_row, riordan_row, s_catalan_triangle, spin_catalan_degeneracy, MSpec,
};
use aci_core::wlp::{wlp_decide, Route, Witness};
use aci_core::{DegreeVector, Monomial, PrimeField};
use serde::Serialize;

use crate::config::{parse_list, parse_m, parse_order, pick, FileConfig};
use crate::output::{json, unsupported, Format};
use crate::{verify, CliError, Command, Family, IdealArgs};

pub struct Rendered {
    pub body: String,
    /// Set when the output reports a failed check.
    pub failure: Option<String>,
}

impl From<String> for Rendered {
    fn from(body: String) -> Self {
        Rendered { body, failure: None }
    }
}

fn ideal(a: &IdealArgs, file: &FileConfig) -> Result<(DegreeVector, u32), CliError> {
    let m = parse_m(&pick(a.m.clone(), file.m.clone(), "m")?, a.n.or(file.n))?;
    let k = pick(a.k, file.k, "k")?;
    if k == 0 {
        return Err(CliError::Input("--k must be at least 1".into()));
    }
    Ok((m, k))
}

fn lines<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    items.into_iter().map(|t| t.to_string() + "\n").collect()
}

fn joined<T: ToString>(items: &[T], sep: &str) -> String {
    items.iter().map(T::to_string).collect::<Vec<_>>().join(sep)
}

pub fn dispatch(cmd: &Command, file: &FileConfig, format: Option<Format>) -> Result<Rendered, CliError> {
    match cmd {
        Command::Gb {
            ideal: a,
            order,
            characteristic,
        } => {
            let (m, k) = ideal(a, file)?;
            let order = parse_order(
                order.order.as_deref().or(file.order.as_deref()),
                order.ranking.as_deref().or(file.ranking.as_deref()),
                m.n(),
            )?;
            let f = format.unwrap_or(Format::Json);
            let body = match characteristic.or(file.p) {
                None => {
                    let gb = reduced_gb(&m, k, &order)?;
                    match f {
                        Format::Json => json(&BasisJson::from_basis(&gb, m.as_slice(), k, None)),
                        Format::Text => basis_text(&gb),
                        Format::M2 => basis_m2(&gb, None),
                        other => return Err(unsupported("gb", other)),
                    }
                }
                Some(p) => {
                    let field = PrimeField::new(p)?;
                    let gb = buchberger(&aci_generators(&m, k, &field), &OracleConfig::new(order, field))?;
                    match f {
                        Format::Json => json(&BasisJson::from_basis(&gb, m.as_slice(), k, Some(p))),
                        Format::Text => basis_text(&gb),
                        Format::M2 => basis_m2(&gb, Some(p)),
                        other => return Err(unsupported("gb", other)),
                    }
                }
            };
            Ok(body.into())
        }
        Command::Init { ideal: a, order } => {
            let (m, k) = ideal(a, file)?;
            let order = parse_order(
                order.order.as_deref().or(file.order.as_deref()),
                order.ranking.as_deref().or(file.ranking.as_deref()),
                m.n(),
            )?;
            let ideal = minimal_generators_ranked(&m, k, order.ranking())?;
            let mut gens = ideal.min_gens().to_vec();
            order.sort_desc(&mut gens);
            gens.reverse();
            let gens: Vec<String> = gens.iter().map(Monomial::to_string).collect();
            #[derive(Serialize)]
            struct InitJson<'a> {
                n: usize,
                m: &'a [u32],
                k: u32,
                ranking: Vec<usize>,
                generators: Vec<String>,
            }
            match format.unwrap_or(Format::Json) {
                Format::Json => Ok(json(&InitJson {
                    n: m.n(),
                    m: m.as_slice(),
                    k,
                    ranking: order.ranking().iter().map(|r| r + 1).collect(),
                    generators: gens,
                })
                .into()),
                Format::Text => Ok(lines(gens).into()),
                other => Err(unsupported("init", other)),
            }
        }
        Command::Crit { ideal: a } => {
            let (m, k) = ideal(a, file)?;
            let c = crit_sets(m.n(), &m, k)?;
            match format.unwrap_or(Format::Json) {
                Format::Json => Ok(json(&CritJson::from_sets(&c)).into()),
                Format::Text => {
                    let mut s = format!("pure powers: {}\n", joined(&c.pure_powers, " "));
                    for (j, v) in c.per_j.iter().enumerate() {
                        let _ = writeln!(s, "crit {}: {}", j + 1, joined(v, " "));
                    }
                    Ok(s.into())
                }
                other => Err(unsupported("crit", other)),
            }
        }
        Command::Hilbert { ideal: a } => {
            let (m, k) = ideal(a, file)?;
            let hs_p = hs_complete_intersection(&m).coeffs().to_vec();
            let hs_q = hs_quotient(m.n(), &m, k)?;
            let (d, delta) = socle_degrees(&m, k, m.n())?;
            #[derive(Serialize)]
            struct HilbertJson {
                #[serde(rename = "hs_P")]
                hs_p: Vec<i64>,
                hs_quotient: Vec<u64>,
                #[serde(rename = "D")]
                d: u32,
                delta: u32,
            }
            match format.unwrap_or(Format::Json) {
                Format::Json => Ok(json(&HilbertJson {
                    hs_p,
                    hs_quotient: hs_q,
                    d,
                    delta,
                })
                .into()),
                Format::Text => Ok(format!(
                    "hs_P: {}\nhs_quotient: {}\nD: {d}\ndelta: {delta}\n",
                    joined(&hs_p, " "),
                    joined(&hs_q, " ")
                )
                .into()),
                Format::Csv => {
                    let mut s = String::from("degree,hs_P,hs_quotient\n");
                    for (i, c) in hs_p.iter().enumerate() {
                        let q = hs_q.get(i).copied().unwrap_or(0);
                        let _ = writeln!(s, "{i},{c},{q}");
                    }
                    Ok(s.into())
                }
                other => Err(unsupported("hilbert", other)),
            }
        }
        Command::Seq {
            family,
            m,
            k,
            sigma2,
            max,
        } => seq(*family, m.as_deref().or(file.m.as_deref()), k.or(file.k), *sigma2, *max, format),
        Command::Wlp { n, m, p, routes } => {
            let m = parse_m(&pick(m.clone(), file.m.clone(), "m")?, n.or(file.n))?;
            let p = pick(*p, file.p, "p")?;
            let equi = m.as_slice().iter().all(|&x| x == m.as_slice()[0]);
            let routes: Vec<Route> = match routes.as_deref().or(file.routes.as_deref()) {
                Some(r) => r.split(',').map(str::parse).collect::<Result<_, _>>()?,
                None if equi => Route::ALL.to_vec(),
                None => vec![Route::Rank, Route::InitialIdeal],
            };
            let v = wlp_decide(&m, p, &routes)?;
            match format.unwrap_or(Format::Json) {
                Format::Json => Ok(json(&v).into()),
                Format::Text => {
                    let mut s = format!(
                        "m = {}, p = {p}: WLP {}\n",
                        joined(&v.m, ","),
                        if v.has_wlp { "holds" } else { "fails" }
                    );
                    for o in &v.outcomes {
                        let _ = write!(s, "  {}: {}", o.route, o.verdict);
                        if let Some(w) = &o.witness {
                            let _ = write!(s, " ({})", witness_text(w));
                        }
                        s.push('\n');
                    }
                    if v.initial_ideal_diverges {
                        s.push_str("  initial ideals over F_p and Q differ although the WLP holds\n");
                    }
                    Ok(s.into())
                }
                other => Err(unsupported("wlp", other)),
            }
        }
        Command::Verify { max_n, max_m, max_k } => {
            let grid = verify::Grid {
                max_n: max_n.or(file.max_n).unwrap_or(4),
                max_m: max_m.or(file.max_m).unwrap_or(4),
                max_k: max_k.or(file.max_k).unwrap_or(4),
            };
            let report = verify::run(&grid)?;
            let body = match format.unwrap_or(Format::Text) {
                Format::Json => json(&report),
                Format::Text => report.text(),
                Format::Csv => report.csv(),
                other => return Err(unsupported("verify", other)),
            };
            let failure = (!report.passed).then(|| format!("{} failing rows", report.failures()));
            Ok(Rendered { body, failure })
        }
        Command::Rank { n, m, p, d, e } => {
            let m = parse_m(&pick(m.clone(), file.m.clone(), "m")?, n.or(file.n))?;
            let p = pick(*p, file.p, "p")?;
            let r = multiplication_rank(&m, p, *d, *e)?;
            #[derive(Serialize)]
            struct RankJson {
                m: Vec<u32>,
                p: u64,
                d: u32,
                e: u32,
                rank: usize,
                source_dim: usize,
                target_dim: usize,
                maximal: bool,
            }
            match format.unwrap_or(Format::Json) {
                Format::Json => Ok(json(&RankJson {
                    m: m.as_slice().to_vec(),
                    p,
                    d: *d,
                    e: *e,
                    rank: r.rank,
                    source_dim: r.source_dim,
                    target_dim: r.target_dim,
                    maximal: r.is_maximal(),
                })
                .into()),
                Format::Text => Ok(format!(
                    "rank {} of a {} x {} map ({})\n",
                    r.rank,
                    r.source_dim,
                    r.target_dim,
                    if r.is_maximal() { "maximal" } else { "not maximal" }
                )
                .into()),
                other => Err(unsupported("rank", other)),
            }
        }
        Command::Render { ideal: a, monomial } => {
            let m = parse_m(&pick(a.m.clone(), file.m.clone(), "m")?, a.n.or(file.n))?;
            let s = Monomial::parse(m.n(), monomial)?;
            let path = monomial_to_path(&s, &m)?;
            let red = match a.k.or(file.k) {
                Some(k) => Some(RedLine::new(&m, k)?),
                None => None,
            };
            match format.unwrap_or(Format::Ascii) {
                Format::Ascii => Ok(render_ascii(&path, red.as_ref()).into()),
                Format::Svg => Ok(render_svg(&path, red.as_ref()).into()),
                other => Err(unsupported("render", other)),
            }
        }
    }
}

fn witness_text(w: &Witness) -> String {
    match w {
        Witness::Rank { degree, rank, expected } => {
            format!("rank {rank} < {expected} from degree {degree}")
        }
        Witness::Threshold { threshold } => format!("p <= threshold {threshold}"),
        Witness::LeadingMonomial { monomial, only_in } => format!("{monomial} is a generator only over {only_in}"),
    }
}

#[derive(Serialize)]
struct SeqJson {
    family: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    m: Option<Vec<u32>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    k: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    sigma2: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    values: Option<Vec<u128>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    rows: Option<Vec<Vec<u128>>>,
}

fn seq(
    family: Family,
    m: Option<&str>,
    k: Option<u32>,
    sigma2: Option<u32>,
    max: usize,
    format: Option<Format>,
) -> Result<Rendered, CliError> {
    let need_m = || -> Result<Vec<u32>, CliError> { parse_list(m.ok_or_else(|| CliError::Input("missing --m".into()))?, "m") };
    let mut out = SeqJson {
        family: "",
        m: None,
        k: None,
        sigma2: None,
        values: None,
        rows: None,
    };
    match family {
        Family::G => {
            let mv = need_m()?;
            let k = k.ok_or_else(|| CliError::Input("missing --k".into()))?;
            let (tail, prefix) = mv.split_last().expect("non-empty list");
            let spec = MSpec::eventually(prefix.to_vec(), *tail)?;
            let s = gb_degree_sequence(&spec, k, max as u32)?;
            out.family = "g";
            out.m = Some(mv);
            out.k = Some(k);
            out.values = Some((0..=max as u32).map(|d| s.get(d)).collect());
        }
        Family::Motzkin => {
            out.family = "motzkin";
            out.values = Some(motzkin_row(max));
        }
        Family::Riordan => {
            out.family = "riordan";
            out.values = Some(riordan_row(max));
        }
        Family::Catalan => {
            out.family = "catalan";
            out.values = Some(catalan_row(max));
        }
        Family::SCatalan => {
            let mv = need_m()?;
            if mv.len() != 1 || mv[0] < 2 {
                return Err(CliError::Input("s-catalan needs a single --m >= 2".into()));
            }
            out.family = "s-catalan";
            out.rows = Some(s_catalan_triangle(mv[0], max)?.rows);
            out.m = Some(mv);
        }
        Family::Spin => {
            let s2 = sigma2.ok_or_else(|| CliError::Input("missing --sigma2".into()))?;
            out.family = "spin";
            out.sigma2 = Some(s2);
            out.values = Some(
                (0..=max as u32)
                    .map(|n| spin_catalan_degeneracy(s2, n))
                    .collect::<Result<_, _>>()?,
            );
        }
    }
    let body = match format.unwrap_or(Format::Json) {
        Format::Json => json(&out),
        Format::Text => match (&out.values, &out.rows) {
            (Some(v), _) => format!("{}\n", joined(v, " ")),
            (_, Some(rows)) => lines(rows.iter().map(|r| joined(r, " "))),
            _ => unreachable!(),
        },
        Format::Csv => match (&out.values, &out.rows) {
            (Some(v), _) => {
                String::from("n,value\n") + &lines(v.iter().enumerate().map(|(i, x)| format!("{i},{x}")))
            }
            (_, Some(rows)) => {
                let mut s = String::from("n,k,value\n");
                for (n, r) in rows.iter().enumerate() {
                    for (k, x) in r.iter().enumerate() {
                        let _ = writeln!(s, "{n},{k},{x}");
                    }
                }
                s
            }
            _ => unreachable!(),
        },
        other => return Err(unsupported("seq", other)),
    };
    Ok(body.into())
}
