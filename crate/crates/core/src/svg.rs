//! SVG strip diagrams: discs for vertices, bands for edges, boundary coloured by circle.
//!
//! The layout is a seeded spring embedding and makes no geometric promises;
//! only the colours (one per boundary circle) and the twist marks (one per
//! minus edge) carry information.

use std::f64::consts::{PI, TAU};
use std::fmt::Write as _;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::boundary::{boundary_components, Counter, Side};
use crate::gos::{Gos, Stub, VertexId};

const SIZE: f64 = 640.0;
const MARGIN: f64 = 90.0;

fn spring_layout(g: &Gos, seed: u64) -> Vec<(f64, f64)> {
    let n = g.vertex_count();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pos: Vec<(f64, f64)> = (0..n).map(|_| (rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))).collect();
    if n == 1 {
        return vec![(SIZE / 2.0, SIZE / 2.0)];
    }
    let k = (4.0 / n as f64).sqrt();
    let mut temperature = 0.2;
    for _ in 0..300 {
        let mut disp = vec![(0.0, 0.0); n];
        for i in 0..n {
            for j in 0..n {
                if i == j {
                    continue;
                }
                let (dx, dy) = (pos[i].0 - pos[j].0, pos[i].1 - pos[j].1);
                let d = (dx * dx + dy * dy).sqrt().max(1e-3);
                let f = k * k / d;
                disp[i].0 += dx / d * f;
                disp[i].1 += dy / d * f;
            }
        }
        for e in g.edges() {
            let (a, b) = (g.vertex_of(e.a).index(), g.vertex_of(e.b).index());
            if a == b {
                continue;
            }
            let (dx, dy) = (pos[a].0 - pos[b].0, pos[a].1 - pos[b].1);
            let d = (dx * dx + dy * dy).sqrt().max(1e-3);
            let f = d * d / k;
            disp[a].0 -= dx / d * f;
            disp[a].1 -= dy / d * f;
            disp[b].0 += dx / d * f;
            disp[b].1 += dy / d * f;
        }
        for i in 0..n {
            let (dx, dy) = disp[i];
            let d = (dx * dx + dy * dy).sqrt().max(1e-9);
            pos[i].0 += dx / d * d.min(temperature);
            pos[i].1 += dy / d * d.min(temperature);
        }
        temperature *= 0.985;
    }
    let (min_x, max_x) = pos.iter().fold((f64::MAX, f64::MIN), |(lo, hi), p| (lo.min(p.0), hi.max(p.0)));
    let (min_y, max_y) = pos.iter().fold((f64::MAX, f64::MIN), |(lo, hi), p| (lo.min(p.1), hi.max(p.1)));
    let span = (max_x - min_x).max(max_y - min_y).max(1e-6);
    let scale = (SIZE - 2.0 * MARGIN) / span;
    pos.iter()
        .map(|&(x, y)| (MARGIN + (x - min_x) * scale, MARGIN + (y - min_y) * scale))
        .collect()
}

struct Geometry {
    centers: Vec<(f64, f64)>,
    radius: f64,
    half_width: f64,
    base: Vec<f64>,
}

impl Geometry {
    fn angle(&self, g: &Gos, s: Stub) -> f64 {
        let v = g.vertex_of(s);
        self.base[v.index()] + TAU * g.slot_of(s) as f64 / g.valency(v) as f64
    }

    fn point(&self, v: VertexId, angle: f64, r: f64) -> (f64, f64) {
        let (cx, cy) = self.centers[v.index()];
        // screen y grows downward; negate to keep the cyclic order anticlockwise
        (cx + r * angle.cos(), cy - r * angle.sin())
    }

    fn corner_angle(&self, g: &Gos, c: Counter) -> f64 {
        let s = g.stub_at(c.vertex, c.slot);
        let w = g.valency(c.vertex) as f64;
        let delta = (self.half_width / self.radius).min(PI / w * 0.6);
        self.angle(g, s) + if c.side == Side::Left { delta } else { -delta }
    }

    fn corner(&self, g: &Gos, c: Counter) -> (f64, f64) {
        self.point(c.vertex, self.corner_angle(g, c), self.radius)
    }

    /// Point where a band leaves the disc along the stub direction.
    fn reach(&self, g: &Gos, c: Counter, out: f64) -> (f64, f64) {
        self.point(c.vertex, self.corner_angle(g, c), self.radius + out)
    }
}

fn pile_colour(i: usize) -> String {
    const PALETTE: [&str; 8] = ["#d62728", "#1f77b4", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#e377c2", "#17becf"];
    match PALETTE.get(i) {
        Some(c) => c.to_string(),
        None => format!("hsl({:.0},70%,40%)", (i as f64 * 137.508) % 360.0),
    }
}

/// Renders `g` as an SVG document; identical inputs and seeds give identical output.
pub fn render_svg(g: &Gos, seed: u64) -> String {
    let centers = spring_layout(g, seed);
    let mut min_gap = f64::MAX;
    for i in 0..centers.len() {
        for j in i + 1..centers.len() {
            let (dx, dy) = (centers[i].0 - centers[j].0, centers[i].1 - centers[j].1);
            min_gap = min_gap.min((dx * dx + dy * dy).sqrt());
        }
    }
    let radius = (min_gap * 0.22).clamp(12.0, 40.0);
    let geo = Geometry {
        centers,
        radius,
        half_width: radius * 0.22,
        base: vec![PI / 2.0; g.vertex_count()],
    };
    let reach = radius * 1.6;

    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
    )
    .unwrap();
    out.push_str("<style>.band{fill:#eeeeee;stroke:none}.disc{fill:#dddddd;stroke:none}.midline{fill:none;stroke:#555;stroke-dasharray:4 3;stroke-width:1}.boundary{fill:none;stroke-width:2.5}.twist{stroke:#000;stroke-width:2}.label{font:11px sans-serif;text-anchor:middle}</style>\n");

    // bands
    for (i, e) in g.edges().iter().enumerate() {
        let ca = Counter::new(g.vertex_of(e.a), g.slot_of(e.a), Side::Left);
        let cb = Counter::new(g.vertex_of(e.b), g.slot_of(e.b), Side::Left);
        let ra = Counter { side: Side::Right, ..ca };
        let rb = Counter { side: Side::Right, ..cb };
        let (p1, p2, p3, p4) = (geo.corner(g, ca), geo.corner(g, ra), geo.corner(g, cb), geo.corner(g, rb));
        let (q1, q2, q3, q4) = (geo.reach(g, ca, reach), geo.reach(g, ra, reach), geo.reach(g, cb, reach), geo.reach(g, rb, reach));
        // Left of a meets Right of b on a plus edge, Left of b on a minus edge.
        let (m1, n1, m2, n2) = if e.sign.is_minus() { (p3, q3, p4, q4) } else { (p4, q4, p3, q3) };
        writeln!(
            out,
            r#"<path class="band" d="M{:.1},{:.1} C{:.1},{:.1} {:.1},{:.1} {:.1},{:.1} L{:.1},{:.1} C{:.1},{:.1} {:.1},{:.1} {:.1},{:.1} Z"/>"#,
            p1.0, p1.1, q1.0, q1.1, n1.0, n1.1, m1.0, m1.1, m2.0, m2.1, n2.0, n2.1, q2.0, q2.1, p2.0, p2.1
        )
        .unwrap();
        let (sa, sb) = (geo.point(ca.vertex, geo.angle(g, e.a), radius), geo.point(cb.vertex, geo.angle(g, e.b), radius));
        let (ta, tb) = (
            geo.point(ca.vertex, geo.angle(g, e.a), radius + reach),
            geo.point(cb.vertex, geo.angle(g, e.b), radius + reach),
        );
        writeln!(
            out,
            r#"<path class="midline" data-edge="{}" d="M{:.1},{:.1} C{:.1},{:.1} {:.1},{:.1} {:.1},{:.1}"/>"#,
            i + 1,
            sa.0, sa.1, ta.0, ta.1, tb.0, tb.1, sb.0, sb.1
        )
        .unwrap();
        if e.sign.is_minus() {
            // midpoint of the cubic at t = 1/2
            let mx = (sa.0 + 3.0 * ta.0 + 3.0 * tb.0 + sb.0) / 8.0;
            let my = (sa.1 + 3.0 * ta.1 + 3.0 * tb.1 + sb.1) / 8.0;
            let d = radius * 0.3;
            writeln!(
                out,
                r#"<path class="twist" data-edge="{}" d="M{:.1},{:.1} L{:.1},{:.1} M{:.1},{:.1} L{:.1},{:.1}"/>"#,
                i + 1,
                mx - d, my - d, mx + d, my + d, mx - d, my + d, mx + d, my - d
            )
            .unwrap();
        }
    }

    // discs
    for v in g.vertices() {
        let (cx, cy) = geo.centers[v.index()];
        writeln!(out, r#"<circle class="disc" cx="{cx:.1}" cy="{cy:.1}" r="{radius:.1}"/>"#).unwrap();
        writeln!(out, r#"<text class="label" x="{cx:.1}" y="{:.1}">{v}</text>"#, cy + 4.0).unwrap();
    }

    // boundary circles: band sides for edge moves, disc rim arcs for vertex moves
    for (i, pile) in boundary_components(g).iter().enumerate() {
        let colour = pile_colour(i);
        let mut d = String::new();
        for (j, pair) in pile.chunks(2).enumerate() {
            let (c, e) = (pair[0], pair[1]);
            let (p, q) = (geo.corner(g, c), geo.corner(g, e));
            let (pc, qc) = (geo.reach(g, c, reach), geo.reach(g, e, reach));
            if j == 0 {
                write!(d, "M{:.1},{:.1} ", p.0, p.1).unwrap();
            }
            write!(d, "C{:.1},{:.1} {:.1},{:.1} {:.1},{:.1} ", pc.0, pc.1, qc.0, qc.1, q.0, q.1).unwrap();
            let next = pile[(2 * j + 2) % pile.len()];
            // Adjacent corners on the rim: anticlockwise from a left side, clockwise from a right side.
            let sweep = if e.side == Side::Left { 0 } else { 1 };
            let r = geo.corner(g, next);
            write!(d, "A{radius:.1},{radius:.1} 0 0 {sweep} {:.1},{:.1} ", r.0, r.1).unwrap();
        }
        writeln!(
            out,
            r#"<path class="boundary" data-pile="{}" stroke="{colour}" d="{}Z"/>"#,
            i + 1,
            d.trim_end()
        )
        .unwrap();
    }
    out.push_str("</svg>\n");
    out
}
