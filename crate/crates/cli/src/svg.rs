//! SVG picture of the parallelogram inside the unit square.

use std::fmt::Write as _;

use ghys_core::torus::{Embedding, ParallelogramData, PlanePoint, TorusPointQ};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

const CANVAS: i64 = 400;
const PAD: i64 = 30;

/// Affine map from the plane to canvas coordinates (y pointing down).
struct Frame {
    min_x: BigRational,
    max_y: BigRational,
    scale: BigRational,
}

impl Frame {
    fn fit(points: &[PlanePoint]) -> Frame {
        let zero = BigRational::zero();
        let one = BigRational::one();
        let mut min_x = zero.clone();
        let mut max_x = one.clone();
        let mut min_y = zero;
        let mut max_y = one;
        for p in points {
            min_x = min_x.min(p.x.clone());
            max_x = max_x.max(p.x.clone());
            min_y = min_y.min(p.y.clone());
            max_y = max_y.max(p.y.clone());
        }
        let span = (&max_x - &min_x).max(&max_y - &min_y);
        let scale = BigRational::from_integer(BigInt::from(CANVAS - 2 * PAD)) / span;
        Frame { min_x, max_y, scale }
    }

    fn x(&self, v: &BigRational) -> String {
        fixed((v - &self.min_x) * &self.scale + BigRational::from_integer(PAD.into()))
    }

    fn y(&self, v: &BigRational) -> String {
        fixed((&self.max_y - v) * &self.scale + BigRational::from_integer(PAD.into()))
    }

    fn xy(&self, p: &PlanePoint) -> (String, String) {
        (self.x(&p.x), self.y(&p.y))
    }
}

/// Exact rounding to two decimals.
fn fixed(v: BigRational) -> String {
    let hundredths = (v * BigRational::from_integer(100.into())).round().to_integer();
    let neg = hundredths < BigInt::zero();
    let abs = if neg { -hundredths } else { hundredths };
    let (int, frac): (BigInt, BigInt) = (&abs / 100, &abs % 100);
    format!("{}{}.{:0>2}", if neg { "-" } else { "" }, int, frac.to_string())
}

fn midpoint(a: &PlanePoint, b: &PlanePoint) -> PlanePoint {
    let two = BigRational::from_integer(2.into());
    PlanePoint::new((&a.x + &b.x) / &two, (&a.y + &b.y) / &two)
}

pub fn emit_parallelogram_svg(p: &ParallelogramData, fixed_points: &[TorusPointQ]) -> String {
    let verts = [&p.lift_o, &p.lift_m, &p.lift_o2, &p.lift_n];
    let frame = Frame::fit(&verts.iter().map(|v| (*v).clone()).collect::<Vec<_>>());
    let mut s = String::new();
    writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{CANVAS}" height="{CANVAS}" viewBox="0 0 {CANVAS} {CANVAS}">"#
    )
    .unwrap();
    writeln!(s, "<!-- word {} RW {} -->", p.word, p.rw).unwrap();
    if p.embedding == Embedding::DegenerateMN {
        writeln!(s, "<!-- degenerate: M and N coincide on the torus -->").unwrap();
    }

    let (x0, y1) = frame.xy(&PlanePoint::from_ints(0, 1));
    let (x1, y0) = frame.xy(&PlanePoint::from_ints(1, 0));
    writeln!(
        s,
        r#"<polygon class="square" points="{x0},{y0} {x1},{y0} {x1},{y1} {x0},{y1}" fill="none" stroke="gray" stroke-dasharray="4 3"/>"#
    )
    .unwrap();

    let pts: Vec<String> = verts.iter().map(|v| {
        let (x, y) = frame.xy(v);
        format!("{x},{y}")
    }).collect();
    writeln!(s, r#"<polygon class="parallelogram" points="{}" fill="none" stroke="black"/>"#, pts.join(" ")).unwrap();

    for (name, seg) in [("r₀", &p.r0), ("r₁", &p.r1), ("s₀", &p.s0), ("s₁", &p.s1)] {
        let (x, y) = frame.xy(&midpoint(&seg.from, &seg.to));
        writeln!(s, r#"<text class="side" x="{x}" y="{y}" font-size="14">{name}</text>"#).unwrap();
    }
    for (name, v) in [("O", &p.lift_o), ("M", &p.lift_m), ("O", &p.lift_o2), ("N", &p.lift_n)] {
        let (x, y) = frame.xy(v);
        writeln!(s, r#"<text class="vertex" x="{x}" y="{y}" font-size="16">{name}</text>"#).unwrap();
    }
    for q in fixed_points {
        let (x, y) = frame.xy(&q.lift());
        writeln!(s, r#"<circle class="fixed" cx="{x}" cy="{y}" r="3" fill="red"/>"#).unwrap();
    }
    s.push_str("</svg>\n");
    s
}
