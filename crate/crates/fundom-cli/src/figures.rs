//! Static SVG renderings of the lattice geometry.
//!
//! The level plane {x1 + x2 + x3 = c} is projected by x -> x2*u + x3*v with
//! u = (-1, 0) and v = (-1/2, sqrt(3)/2) in y-down page coordinates, which
//! renders every level triangle as equilateral. All coordinates are printed
//! with two decimals and every element list is sorted, so the byte output is
//! a pure function of the inputs.

use fundom::ak::{ak_classify_with_scale, default_scale, ParabolicLabel, Window, MIN_SCALE};
use fundom::family::OrthogonalFamily;
use fundom::paving::{
    complement_region, fundamental_fixed_points, triangle_points, triangle_region, v_region,
    ComplementRegion, TriangleRegion, VRegion,
};
use fundom::weyl::RootValuation;
use fundom::Result;

use crate::Figure;

const UNIT: f64 = 40.0;
const DOT: f64 = 5.0;

const REGION_COLORS: [&str; 7] = [
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b", "#e377c2",
];

const LABEL_COLORS: [&str; 13] = [
    "#bbbbbb", "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b", "#e377c2",
    "#7f7f7f", "#bcbd22", "#17becf", "#3355dd", "#cc8844",
];

fn project(x: &[i64]) -> (f64, f64) {
    let (x2, x3) = (x[1] as f64, x[2] as f64);
    let px = -x2 - 0.5 * x3;
    let py = f64::sqrt(3.0) / 2.0 * x3;
    (px * UNIT, py * UNIT)
}

// keep negative zero out of the output
fn z(v: f64) -> f64 {
    if v == 0.0 {
        0.0
    } else {
        v
    }
}

struct Canvas {
    body: String,
    min_x: f64,
    min_y: f64,
    max_x: f64,
    max_y: f64,
}

impl Canvas {
    fn new() -> Self {
        Canvas {
            body: String::new(),
            min_x: f64::INFINITY,
            min_y: f64::INFINITY,
            max_x: f64::NEG_INFINITY,
            max_y: f64::NEG_INFINITY,
        }
    }

    fn grow(&mut self, x: f64, y: f64, pad: f64) {
        self.min_x = self.min_x.min(x - pad);
        self.min_y = self.min_y.min(y - pad);
        self.max_x = self.max_x.max(x + pad);
        self.max_y = self.max_y.max(y + pad);
    }

    fn polygon(&mut self, pts: &[(f64, f64)], stroke: &str, width: f64, dash: Option<&str>) {
        let coords: Vec<String> = pts
            .iter()
            .map(|&(x, y)| format!("{:.2},{:.2}", z(x), z(y)))
            .collect();
        for &(x, y) in pts {
            self.grow(x, y, width);
        }
        let dash = match dash {
            Some(d) => format!(" stroke-dasharray=\"{d}\""),
            None => String::new(),
        };
        self.body.push_str(&format!(
            "<polygon points=\"{}\" fill=\"none\" stroke=\"{stroke}\" \
             stroke-width=\"{width:.2}\"{dash}/>\n",
            coords.join(" ")
        ));
    }

    fn dot(&mut self, (x, y): (f64, f64), r: f64, fill: &str) {
        self.grow(x, y, r);
        self.body.push_str(&format!(
            "<circle cx=\"{:.2}\" cy=\"{:.2}\" r=\"{r:.2}\" fill=\"{fill}\"/>\n",
            z(x),
            z(y)
        ));
    }

    fn ring(&mut self, (x, y): (f64, f64), r: f64, stroke: &str) {
        self.grow(x, y, r);
        self.body.push_str(&format!(
            "<circle cx=\"{:.2}\" cy=\"{:.2}\" r=\"{r:.2}\" fill=\"none\" \
             stroke=\"{stroke}\" stroke-width=\"1.50\"/>\n",
            z(x),
            z(y)
        ));
    }

    fn text(&mut self, (x, y): (f64, f64), content: &str, anchor: &str, size: f64) {
        self.grow(x, y, size);
        self.body.push_str(&format!(
            "<text x=\"{:.2}\" y=\"{:.2}\" font-family=\"monospace\" \
             font-size=\"{size:.2}\" fill=\"#333333\" text-anchor=\"{anchor}\">{content}</text>\n",
            z(x),
            z(y)
        ));
    }

    fn legend(&mut self, entries: &[(String, &str)]) {
        let x = self.max_x + 30.0;
        let mut y = self.min_y + 10.0;
        for (name, color) in entries {
            self.dot((x, y), DOT, color);
            self.text((x + 12.0, y + 4.0), name, "start", 13.0);
            y += 22.0;
        }
    }

    fn caption(&mut self, content: &str) {
        let pos = (self.min_x, self.max_y + 28.0);
        self.text(pos, content, "start", 14.0);
    }

    fn finish(self, margin: f64) -> String {
        let x = z(self.min_x - margin);
        let y = z(self.min_y - margin);
        let w = self.max_x - self.min_x + 2.0 * margin;
        let h = self.max_y - self.min_y + 2.0 * margin;
        format!(
            "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{w:.2}\" height=\"{h:.2}\" \
             viewBox=\"{x:.2} {y:.2} {w:.2} {h:.2}\">\n\
             <rect x=\"{x:.2}\" y=\"{y:.2}\" width=\"{w:.2}\" height=\"{h:.2}\" \
             fill=\"#ffffff\"/>\n{}</svg>\n",
            self.body
        )
    }
}

/// Projected family vertices in cyclic order around their centroid.
fn hexagon_cycle(family: &OrthogonalFamily) -> Vec<(f64, f64)> {
    let pts: Vec<(f64, f64)> = family
        .vertices()
        .values()
        .map(|v| project(v.coords()))
        .collect();
    let n = pts.len() as f64;
    let cx = pts.iter().map(|p| p.0).sum::<f64>() / n;
    let cy = pts.iter().map(|p| p.1).sum::<f64>() / n;
    let mut ordered = pts;
    ordered
        .sort_by(|a, b| f64::atan2(a.1 - cy, a.0 - cx).total_cmp(&f64::atan2(b.1 - cy, b.0 - cx)));
    ordered
}

fn triangle_corners(rv: &RootValuation) -> Result<[Vec<i64>; 3]> {
    let (n1, n2) = two_valuations(rv)?;
    Ok([
        vec![2 * n1, n1 + n2, -n1],
        vec![2 * n1, -n1, n1 + n2],
        vec![-n2, n1 + n2, n1 + n2],
    ])
}

fn two_valuations(rv: &RootValuation) -> Result<(i64, i64)> {
    let s = rv.simple_valuations();
    if s.len() != 2 {
        return Err(fundom::Error::RankNotThree(s.len() + 1));
    }
    Ok((s[0], s[1]))
}

pub fn render(figure: Figure, rv: &RootValuation) -> Result<String> {
    let (n1, n2) = two_valuations(rv)?;
    let family = OrthogonalFamily::regular(rv);
    let mut canvas = Canvas::new();

    match figure {
        Figure::Hexagon => {
            // the hexagon cut out of the level plane by 0 <= x_i and
            // x_i <= lambda_i, drawn as the intersection of the two triangles
            let level = family.level();
            let lambda: Vec<i64> = (0..3)
                .map(|i| (0..3).filter(|&j| j != i).map(|j| rv.pair(i, j)).sum())
                .collect();
            let lower: Vec<(f64, f64)> = (0..3)
                .map(|i| {
                    let mut c = vec![0i64; 3];
                    c[i] = level;
                    project(&c)
                })
                .collect();
            let upper: Vec<(f64, f64)> = (0..3)
                .map(|i| {
                    let mut c = lambda.clone();
                    c[i] = lambda[i] - level;
                    project(&c)
                })
                .collect();
            canvas.polygon(&lower, "#999999", 1.0, Some("6 4"));
            canvas.polygon(&upper, "#999999", 1.0, Some("6 4"));
            canvas.polygon(&hexagon_cycle(&family), "#222222", 2.0, None);
            for mu in fundamental_fixed_points(rv)? {
                canvas.dot(project(mu.coords()), DOT * 0.7, "#555555");
            }
            let pts: Vec<(f64, f64)> = family
                .vertices()
                .values()
                .map(|v| project(v.coords()))
                .collect();
            let n = pts.len() as f64;
            let cx = pts.iter().map(|p| p.0).sum::<f64>() / n;
            let cy = pts.iter().map(|p| p.1).sum::<f64>() / n;
            for (w, vertex) in family.vertices() {
                let (x, y) = project(vertex.coords());
                canvas.dot((x, y), DOT, "#222222");
                let (dx, dy) = (x - cx, y - cy);
                let len = f64::sqrt(dx * dx + dy * dy).max(1.0);
                let coords: Vec<String> = vertex.coords().iter().map(|c| c.to_string()).collect();
                let label = format!("{} ({})", w.one_line(), coords.join(", "));
                canvas.text(
                    (x + 24.0 * dx / len, y + 24.0 * dy / len + 4.0),
                    &label,
                    "middle",
                    13.0,
                );
            }
            canvas.caption(&format!("hexagon, n = ({n1}, {n2})"));
        }
        Figure::Triangle => {
            let corners = triangle_corners(rv)?;
            let outline: Vec<(f64, f64)> = corners.iter().map(|c| project(c)).collect();
            canvas.polygon(&outline, "#222222", 2.0, None);
            canvas.polygon(&hexagon_cycle(&family), "#999999", 1.0, Some("6 4"));
            for mu in triangle_points(rv)? {
                let region = triangle_region(rv, &mu)?;
                let idx = TriangleRegion::ALL
                    .iter()
                    .position(|r| *r == region)
                    .unwrap();
                canvas.dot(project(mu.coords()), DOT, REGION_COLORS[idx]);
            }
            let entries: Vec<(String, &str)> = TriangleRegion::ALL
                .iter()
                .enumerate()
                .map(|(i, r)| (r.to_string(), REGION_COLORS[i]))
                .collect();
            canvas.legend(&entries);
            canvas.caption(&format!("triangle regions, n = ({n1}, {n2})"));
        }
        Figure::Complement => {
            let corners = triangle_corners(rv)?;
            let outline: Vec<(f64, f64)> = corners.iter().map(|c| project(c)).collect();
            canvas.polygon(&outline, "#222222", 2.0, None);
            canvas.polygon(&hexagon_cycle(&family), "#222222", 1.5, None);
            for mu in triangle_points(rv)? {
                let color = match complement_region(rv, &mu)? {
                    None => "#cccccc",
                    Some(region) => {
                        let idx = ComplementRegion::ALL
                            .iter()
                            .position(|r| *r == region)
                            .unwrap();
                        REGION_COLORS[idx]
                    }
                };
                canvas.dot(project(mu.coords()), DOT, color);
            }
            let mut entries: Vec<(String, &str)> = ComplementRegion::ALL
                .iter()
                .enumerate()
                .map(|(i, r)| (r.to_string(), REGION_COLORS[i]))
                .collect();
            entries.push(("interior".to_string(), "#cccccc"));
            canvas.legend(&entries);
            canvas.caption(&format!("complement regions, n = ({n1}, {n2})"));
        }
        Figure::Nonstandard => {
            canvas.polygon(&hexagon_cycle(&family), "#222222", 2.0, None);
            for mu in fundamental_fixed_points(rv)? {
                let report = v_region(rv, &mu)?;
                let idx = VRegion::ALL
                    .iter()
                    .position(|r| *r == report.region)
                    .unwrap();
                let pos = project(mu.coords());
                canvas.dot(pos, DOT, REGION_COLORS[idx]);
                if report.in_overlap {
                    canvas.ring(pos, DOT + 3.0, "#222222");
                }
            }
            let entries: Vec<(String, &str)> = VRegion::ALL
                .iter()
                .enumerate()
                .map(|(i, r)| (r.to_string(), REGION_COLORS[i]))
                .collect();
            canvas.legend(&entries);
            canvas.caption(&format!("nonstandard paving, n = ({n1}, {n2})"));
        }
        Figure::Partition => {
            let window = Window {
                level: family.level(),
                max_abs: family.level() + 4,
            };
            let points = window.points();
            let scale = points
                .iter()
                .map(|mu| default_scale(rv, mu))
                .try_fold(MIN_SCALE, |acc, s| s.map(|s| acc.max(s)))?;
            let labels = ParabolicLabel::all();
            let color_of = |label: &ParabolicLabel| {
                let idx = labels.iter().position(|l| l == label).unwrap();
                LABEL_COLORS[idx]
            };
            for mu in &points {
                let label = ak_classify_with_scale(rv, mu, scale)?;
                canvas.dot(project(mu.coords()), DOT * 0.8, color_of(&label));
            }
            canvas.polygon(&hexagon_cycle(&family), "#222222", 1.5, None);
            let entries: Vec<(String, &str)> = labels
                .iter()
                .map(|l| (l.to_string(), color_of(l)))
                .collect();
            canvas.legend(&entries);
            canvas.caption(&format!("stratum partition, n = ({n1}, {n2})"));
        }
    }

    Ok(canvas.finish(30.0))
}
