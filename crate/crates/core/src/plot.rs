//! Lattice diagrams of planar good semigroups and ideals.
//!
//! A diagram shows the small elements as dots, the rays `a + H_J` leaving
//! the border points and the square `C + ℕ²`, on the window `[0, C + 2]`.
//! Output is a pure function of the input, so it can be compared byte for
//! byte.

use std::fmt::Write;

use crate::error::{Error, Result};
use crate::lattice::Point;
use crate::semigroup::SmallSet;

/// SVG units per lattice step.
pub const SCALE: i64 = 20;
const MARGIN: i64 = 30;

/// A diagram of a small set and its conductor.
#[derive(Clone, Debug)]
pub struct Plot<'a> {
    small: &'a SmallSet,
    marks: Vec<Point>,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Cell {
    Empty,
    Small,
    Marked,
    MarkedSmall,
    RayRight,
    RayUp,
    Hatch,
}

impl<'a> Plot<'a> {
    pub fn new(small: &'a SmallSet) -> Result<Self> {
        if small.dim() != 2 {
            return Err(Error::UnsupportedDimension { op: "plot", dim: small.dim() });
        }
        Ok(Plot { small, marks: Vec::new() })
    }

    /// Circle the given points, e.g. a generating system.
    pub fn mark(mut self, points: &[Point]) -> Self {
        self.marks.extend(points.iter().filter(|p| p.dim() == 2).cloned());
        self.marks.sort();
        self.marks.dedup();
        self
    }

    fn conductor(&self) -> &Point {
        self.small.top()
    }

    /// Upper corner of the window.
    pub fn extent(&self) -> Point {
        let c = self.conductor();
        let mut e = c + &Point::splat(2, 2);
        for m in &self.marks {
            e = e.join(m);
        }
        e
    }

    /// Border points with a horizontal ray (`a_1 = C_1`, `a_2 < C_2`) and
    /// with a vertical one.
    pub fn rays(&self) -> (Vec<Point>, Vec<Point>) {
        let c = self.conductor();
        let right = self.small.iter().filter(|a| a.get(0) == c.get(0) && a.get(1) < c.get(1)).cloned().collect();
        let up = self.small.iter().filter(|a| a.get(1) == c.get(1) && a.get(0) < c.get(0)).cloned().collect();
        (right, up)
    }

    fn cell(&self, x: i64, y: i64) -> Cell {
        let p = Point::from([x, y]);
        let c = self.conductor();
        let small = self.small.contains(&p);
        let marked = self.marks.binary_search(&p).is_ok();
        match (small, marked) {
            (true, true) => return Cell::MarkedSmall,
            (false, true) => return Cell::Marked,
            (true, false) => return Cell::Small,
            _ => {}
        }
        if x >= c.get(0) && y >= c.get(1) {
            Cell::Hatch
        } else if x > c.get(0) && self.small.contains(&Point::from([c.get(0), y])) {
            Cell::RayRight
        } else if y > c.get(1) && self.small.contains(&Point::from([x, c.get(1)])) {
            Cell::RayUp
        } else {
            Cell::Empty
        }
    }

    pub fn ascii(&self) -> String {
        let e = self.extent();
        let width = e.get(1).to_string().len();
        let mut out = String::new();
        for y in (0..=e.get(1)).rev() {
            write!(out, "{y:>width$} ").unwrap();
            for x in 0..=e.get(0) {
                out.push(match self.cell(x, y) {
                    Cell::Empty => '.',
                    Cell::Small => '*',
                    Cell::Marked => 'o',
                    Cell::MarkedSmall => '@',
                    Cell::RayRight => '-',
                    Cell::RayUp => '|',
                    Cell::Hatch => '#',
                });
            }
            out.push('\n');
        }
        write!(out, "{:width$} ", "").unwrap();
        for x in 0..=e.get(0) {
            out.push(char::from_digit((x % 10) as u32, 10).unwrap());
        }
        out.push('\n');
        let c = self.conductor();
        writeln!(out, "conductor ({},{})", c.get(0), c.get(1)).unwrap();
        out.push_str("* small element   - | border ray   # C + N^2   . not in the set\n");
        if !self.marks.is_empty() {
            out.push_str("o marked point    @ marked small element\n");
        }
        out
    }

    pub fn svg(&self) -> String {
        let e = self.extent();
        let (w, h) = (2 * MARGIN + SCALE * e.get(0), 2 * MARGIN + SCALE * e.get(1));
        let px = |x: i64| MARGIN + SCALE * x;
        let py = |y: i64| MARGIN + SCALE * (e.get(1) - y);
        let c = self.conductor();
        let mut s = String::new();
        writeln!(
            s,
            r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#
        )
        .unwrap();
        s.push_str(concat!(
            r#"<defs><pattern id="hatch" width="6" height="6" patternUnits="userSpaceOnUse" patternTransform="rotate(45)">"#,
            r##"<line x1="0" y1="0" x2="0" y2="6" stroke="#666" stroke-width="1"/></pattern></defs>"##,
            "\n"
        ));
        writeln!(s, r#"<rect x="0" y="0" width="{w}" height="{h}" fill="white"/>"#).unwrap();

        s.push_str(r##"<g stroke="#e0e0e0" stroke-width="1">"##);
        s.push('\n');
        for x in 0..=e.get(0) {
            writeln!(s, r#"<line x1="{0}" y1="{1}" x2="{0}" y2="{2}"/>"#, px(x), py(0), py(e.get(1))).unwrap();
        }
        for y in 0..=e.get(1) {
            writeln!(s, r#"<line x1="{1}" y1="{0}" x2="{2}" y2="{0}"/>"#, py(y), px(0), px(e.get(0))).unwrap();
        }
        s.push_str("</g>\n");

        writeln!(
            s,
            r##"<rect x="{}" y="{}" width="{}" height="{}" fill="url(#hatch)" stroke="#666"/>"##,
            px(c.get(0)),
            py(e.get(1)),
            SCALE * (e.get(0) - c.get(0)),
            SCALE * (e.get(1) - c.get(1))
        )
        .unwrap();

        s.push_str(r##"<g stroke="#000" stroke-width="1.5">"##);
        s.push('\n');
        writeln!(s, r#"<line x1="{0}" y1="{1}" x2="{2}" y2="{1}"/>"#, px(0), py(0), px(e.get(0))).unwrap();
        writeln!(s, r#"<line x1="{0}" y1="{1}" x2="{0}" y2="{2}"/>"#, px(0), py(0), py(e.get(1))).unwrap();
        s.push_str("</g>\n");

        s.push_str(r##"<g font-family="monospace" font-size="9" fill="#444" text-anchor="middle">"##);
        s.push('\n');
        for x in 0..=e.get(0) {
            writeln!(s, r#"<text x="{}" y="{}">{x}</text>"#, px(x), py(0) + 14).unwrap();
        }
        for y in 0..=e.get(1) {
            writeln!(s, r#"<text x="{}" y="{}">{y}</text>"#, px(0) - 14, py(y) + 3).unwrap();
        }
        s.push_str("</g>\n");

        let (right, up) = self.rays();
        s.push_str(r##"<g stroke="#000" stroke-width="1.5" stroke-dasharray="2,4">"##);
        s.push('\n');
        for a in &right {
            let y = py(a.get(1));
            writeln!(s, r#"<line x1="{}" y1="{y}" x2="{}" y2="{y}"/>"#, px(a.get(0)), px(e.get(0))).unwrap();
        }
        for a in &up {
            let x = px(a.get(0));
            writeln!(s, r#"<line x1="{x}" y1="{}" x2="{x}" y2="{}"/>"#, py(a.get(1)), py(e.get(1))).unwrap();
        }
        s.push_str("</g>\n");

        s.push_str(r##"<g fill="#000">"##);
        s.push('\n');
        for a in self.small {
            writeln!(s, r#"<circle cx="{}" cy="{}" r="4"/>"#, px(a.get(0)), py(a.get(1))).unwrap();
        }
        s.push_str("</g>\n");

        if !self.marks.is_empty() {
            s.push_str(r##"<g fill="none" stroke="#c00" stroke-width="1.5">"##);
            s.push('\n');
            for a in &self.marks {
                writeln!(s, r#"<circle cx="{}" cy="{}" r="7"/>"#, px(a.get(0)), py(a.get(1))).unwrap();
            }
            s.push_str("</g>\n");
        }
        s.push_str("</svg>\n");
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{amalgamation, duplication};
    use crate::numerical::{NumericalIdeal, NumericalSemigroup};
    use crate::pt;
    use crate::semigroup::GoodSemigroup;

    fn ns(g: &[i64]) -> NumericalSemigroup {
        NumericalSemigroup::from_generators(g).unwrap()
    }

    #[test]
    fn duplication_diagram() {
        let s = ns(&[2, 3]);
        let d = duplication(&s, &NumericalIdeal::from_generators(&s, &[6]).unwrap()).unwrap();
        let plot = Plot::new(d.small()).unwrap();
        let (right, up) = plot.rays();
        assert_eq!(right, vec![pt![8, 6]]);
        assert_eq!(up, vec![pt![6, 8]]);
        let svg = plot.svg();
        assert_eq!(svg.matches("<circle").count(), 12);
        assert!(svg.contains(r#"<rect x="190" y="30" width="40" height="40" fill="url(#hatch)""#));
        assert_eq!(svg, Plot::new(d.small()).unwrap().svg());

        let ascii = plot.ascii();
        let rows: Vec<&str> = ascii.lines().collect();
        assert_eq!(rows[0], "10 ......|.###");
        assert_eq!(rows[2], " 8 ......*.*##");
        assert_eq!(rows[4], " 6 ......***--");
        assert_eq!(rows[10], " 0 *..........");
    }

    #[test]
    fn amalgamation_rays() {
        let t = ns(&[3, 4]);
        let a = amalgamation(&ns(&[2, 3]), &t, &NumericalIdeal::from_generators(&t, &[3]).unwrap(), 2).unwrap();
        let (right, up) = Plot::new(a.small()).unwrap().rays();
        assert_eq!(right, vec![pt![5, 3], pt![5, 6], pt![5, 7]]);
        assert_eq!(up, vec![pt![3, 9]]);
    }

    #[test]
    fn the_full_plane() {
        let s = GoodSemigroup::full(2);
        let plot = Plot::new(s.small()).unwrap();
        assert_eq!(plot.svg().matches("<circle").count(), 1);
        assert!(plot.ascii().starts_with("2 ###\n1 ###\n0 *##\n"));
    }

    #[test]
    fn marks_widen_the_window() {
        let s = GoodSemigroup::full(2);
        let plot = Plot::new(s.small()).unwrap().mark(&[pt![4, 1]]);
        assert_eq!(plot.extent(), pt![4, 2]);
        assert!(plot.ascii().contains("o marked point"));
    }

    #[test]
    fn three_dimensions_are_refused() {
        let s = GoodSemigroup::full(3);
        assert!(matches!(Plot::new(s.small()), Err(Error::UnsupportedDimension { .. })));
    }
}
