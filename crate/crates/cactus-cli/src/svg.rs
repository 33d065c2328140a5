//! Cylinder drawings of cactus words.
//!
//! The cylinder is unrolled into a rectangle whose left and right edges are identified. Strand
//! `p` sits at column `p`; a letter whose interval wraps is drawn in unrolled columns `i..j+n`,
//! once in place and once shifted left by `n`, both clipped to the rectangle. Strands that pass
//! the seam are dashed.

use std::fmt::Write;

use cactus::CactusWord;

// Layout, in SVG user units.
const COLUMN: f64 = 40.0;
const ROW: f64 = 60.0;
const MARGIN: f64 = 30.0;
const LABEL_WIDTH: f64 = 90.0;
const NODE_RADIUS: f64 = 4.0;
const STROKE: f64 = 2.0;
const DASH: &str = "5,4";

fn x(column: f64) -> f64 {
    MARGIN + (column - 0.5) * COLUMN
}

fn y(row: f64) -> f64 {
    MARGIN + row * ROW
}

fn polyline(out: &mut String, points: &[(f64, f64)], dashed: bool) {
    let pts: Vec<String> = points.iter().map(|(a, b)| format!("{a:.1},{b:.1}")).collect();
    let dash = if dashed {
        format!(" stroke-dasharray=\"{DASH}\"")
    } else {
        String::new()
    };
    writeln!(out, "    <polyline points=\"{}\"{dash}/>", pts.join(" ")).expect("write to string");
}

/// An SVG drawing with one row, and one node, per letter; letters read top to bottom.
pub fn render(w: &CactusWord) -> String {
    let n = w.n();
    let rows = w.len().max(1);
    let (left, right) = (x(0.5), x(n as f64 + 0.5));
    let (top, bottom) = (y(0.0), y(rows as f64));
    let width = right + LABEL_WIDTH;
    let height = bottom + MARGIN;

    let mut out = String::new();
    let mut strands = String::new();
    let mut nodes = String::new();
    let mut labels = String::new();
    for (r, letter) in w.letters().iter().enumerate() {
        let (y0, y1) = (y(r as f64), y(r as f64 + 1.0));
        let ym = (y0 + y1) / 2.0;
        let (i, len) = (letter.i, letter.support_len(n));
        let last = i + len - 1;
        let centre = (i + last) as f64 / 2.0;
        for p in 1..=n {
            if !letter.interval(n).contains(p) {
                polyline(&mut strands, &[(x(p as f64), y0), (x(p as f64), y1)], false);
            }
        }
        let shifts: &[f64] = if last > n { &[0.0, n as f64] } else { &[0.0] };
        for &shift in shifts {
            for u in i..=last {
                let target = i + last - u;
                let dashed = u > n || target > n;
                let points = [
                    (x(u as f64 - shift), y0),
                    (x(centre - shift), ym),
                    (x(target as f64 - shift), y1),
                ];
                polyline(&mut strands, &points, dashed);
            }
        }
        let node = if centre > n as f64 + 0.5 {
            centre - n as f64
        } else {
            centre
        };
        writeln!(
            nodes,
            "    <circle cx=\"{:.1}\" cy=\"{ym:.1}\" r=\"{NODE_RADIUS:.1}\"/>",
            x(node)
        )
        .expect("write to string");
        writeln!(
            labels,
            "    <text x=\"{:.1}\" y=\"{:.1}\">{letter}</text>",
            right + 12.0,
            ym + 4.0
        )
        .expect("write to string");
    }
    if w.is_empty() {
        for p in 1..=n {
            polyline(&mut strands, &[(x(p as f64), top), (x(p as f64), bottom)], false);
        }
    }

    writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width:.1}\" height=\"{height:.1}\" viewBox=\"0 0 {width:.1} {height:.1}\">"
    )
    .expect("write to string");
    writeln!(out, "  <defs>").expect("write to string");
    writeln!(
        out,
        "    <clipPath id=\"cylinder\"><rect x=\"{left:.1}\" y=\"{top:.1}\" width=\"{:.1}\" height=\"{:.1}\"/></clipPath>",
        right - left,
        bottom - top
    )
    .expect("write to string");
    writeln!(out, "  </defs>").expect("write to string");
    // the identified edges of the cylinder
    for edge in [left, right] {
        writeln!(
            out,
            "  <line x1=\"{edge:.1}\" y1=\"{top:.1}\" x2=\"{edge:.1}\" y2=\"{bottom:.1}\" stroke=\"#999\" stroke-dasharray=\"2,3\"/>"
        )
        .expect("write to string");
    }
    for p in 1..=n {
        writeln!(
            out,
            "  <text x=\"{:.1}\" y=\"{:.1}\" text-anchor=\"middle\">{p}</text>",
            x(p as f64),
            top - 10.0
        )
        .expect("write to string");
    }
    writeln!(
        out,
        "  <g clip-path=\"url(#cylinder)\" fill=\"none\" stroke=\"black\" stroke-width=\"{STROKE:.1}\">"
    )
    .expect("write to string");
    out.push_str(&strands);
    writeln!(out, "  </g>").expect("write to string");
    writeln!(out, "  <g fill=\"black\">").expect("write to string");
    out.push_str(&nodes);
    writeln!(out, "  </g>").expect("write to string");
    writeln!(out, "  <g font-family=\"monospace\" font-size=\"12\">").expect("write to string");
    out.push_str(&labels);
    writeln!(out, "  </g>").expect("write to string");
    writeln!(out, "</svg>").expect("write to string");
    out
}
