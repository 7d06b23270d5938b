//! ASCII and SVG pictures of a lattice path with its red line, plus plain-text
//! basis listings.

use std::fmt::Write;

use crate::algebra::{Field, OrderKind};
use crate::basis::GroebnerBasis;
use crate::paths::{LatticePath, RedLine};

/// Vertical extent in doubled units, padded by one unit each way.
fn doubled_range(path: &LatticePath, red: Option<&RedLine>) -> (i64, i64) {
    let mut lo = 0i64;
    let mut hi = 0i64;
    for &h in path.heights() {
        lo = lo.min(2 * h);
        hi = hi.max(2 * h);
    }
    if let Some(r) = red {
        for &y in r.y2() {
            lo = lo.min(y);
            hi = hi.max(y);
        }
    }
    (lo.div_euclid(2) * 2 - 2, (hi + 1).div_euclid(2) * 2 + 2)
}

/// One text row per half unit, top row highest. `*` path vertex, `+` red line,
/// `#` both, `.` grid point, `-` the horizontal axis.
pub fn render_ascii(path: &LatticePath, red: Option<&RedLine>) -> String {
    let (lo, hi) = doubled_range(path, red);
    let n = path.n();
    let mut out = String::new();
    for y in (lo..=hi).rev() {
        let label = if y % 2 == 0 { format!("{:>4} ", y / 2) } else { "     ".to_string() };
        out.push_str(&label);
        for a in 0..=n {
            let on_path = 2 * path.heights()[a] == y;
            let on_red = red.is_some_and(|r| r.y2()[a] == y);
            let c = match (on_path, on_red) {
                (true, true) => '#',
                (true, false) => '*',
                (false, true) => '+',
                _ if y == 0 => '-',
                _ if y % 2 == 0 => '.',
                _ => ' ',
            };
            out.push(c);
            if a < n {
                out.push_str(if y == 0 { "---" } else { "   " });
            }
        }
        out.truncate(out.trim_end_matches(' ').len());
        out.push('\n');
    }
    out.push_str("     ");
    for a in 0..=n {
        let _ = write!(out, "{a:<4}");
    }
    out.truncate(out.trim_end().len());
    out.push('\n');
    out
}

const CELL: i64 = 40;
const PAD: i64 = 20;

/// SVG with a light grid, the black path and a thin red line.
pub fn render_svg(path: &LatticePath, red: Option<&RedLine>) -> String {
    let (lo, hi) = doubled_range(path, red);
    let (ylo, yhi) = (lo / 2, hi / 2);
    let n = path.n() as i64;
    let width = n * CELL + 2 * PAD;
    let height = (yhi - ylo) * CELL + 2 * PAD;
    let px = |a: i64| PAD + a * CELL;
    // Doubled height to pixel row.
    let py = |y2: i64| PAD + (2 * yhi - y2) * CELL / 2;
    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    );
    let _ = writeln!(s, r#"<rect width="{width}" height="{height}" fill="white"/>"#);
    let _ = writeln!(s, r##"<g stroke="#cccccc" stroke-width="1">"##);
    for a in 0..=n {
        let _ = writeln!(s, r#"<line x1="{0}" y1="{1}" x2="{0}" y2="{2}"/>"#, px(a), py(2 * yhi), py(2 * ylo));
    }
    for y in ylo..=yhi {
        let _ = writeln!(s, r#"<line x1="{0}" y1="{2}" x2="{1}" y2="{2}"/>"#, px(0), px(n), py(2 * y));
    }
    let _ = writeln!(s, "</g>");
    if let Some(r) = red {
        let pts: Vec<String> = r
            .y2()
            .iter()
            .enumerate()
            .map(|(a, &y)| format!("{},{}", px(a as i64), py(y)))
            .collect();
        let _ = writeln!(
            s,
            r#"<polyline points="{}" fill="none" stroke="red" stroke-width="1"/>"#,
            pts.join(" ")
        );
    }
    let pts: Vec<String> = path
        .verts()
        .iter()
        .map(|&(a, b)| format!("{},{}", px(a), py(2 * b)))
        .collect();
    let _ = writeln!(
        s,
        r#"<polyline points="{}" fill="none" stroke="black" stroke-width="4" stroke-linejoin="round"/>"#,
        pts.join(" ")
    );
    s.push_str("</svg>\n");
    s
}

/// One polynomial per line.
pub fn basis_text<F: Field>(gb: &GroebnerBasis<F>) -> String {
    let mut out = String::new();
    for line in gb.render_lines() {
        out.push_str(&line);
        out.push('\n');
    }
    out
}

/// A ring declaration and the basis as a list, in infix syntax with `^` and `*`.
pub fn basis_m2<F: Field>(gb: &GroebnerBasis<F>, char_p: Option<u64>) -> String {
    let order = gb.order();
    let mut vars: Vec<String> = order.ranking().iter().map(|r| format!("x{}", r + 1)).collect();
    if vars.is_empty() {
        vars.push("x1".into());
    }
    let coeffs = match char_p {
        Some(p) => format!("ZZ/{p}"),
        None => "QQ".into(),
    };
    let kind = match order.kind() {
        OrderKind::GradedRevLex => "GRevLex",
        OrderKind::GradedLex => "GLex",
    };
    let mut out = format!("R = {coeffs}[{}, MonomialOrder => {kind}];\n", vars.join(", "));
    out.push_str("G = {\n");
    let lines = gb.render_lines();
    for (i, line) in lines.iter().enumerate() {
        let sep = if i + 1 < lines.len() { "," } else { "" };
        let _ = writeln!(out, "  {line}{sep}");
    }
    out.push_str("};\n");
    out
}
