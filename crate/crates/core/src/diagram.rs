//! SVG braid diagrams: horizontal strands, one crossing column per letter.
//!
//! Strand 1 is drawn at the top. Letter `s<k>` crosses the strands at
//! positions `k` and `k+1`; for a positive letter the strand coming from
//! position `k` passes over, for an inverse letter it passes under.

use std::fmt::Write;

use crate::error::{Error, Result};
use crate::word::{BraidWord, Sign};

const MARGIN: f64 = 20.0;
const COLUMN: f64 = 40.0;
const SPACING: f64 = 30.0;
const STROKE: f64 = 4.0;
const HALO: f64 = 10.0;
const PALETTE: [&str; 6] = [
    "#d4a017", "#c0392b", "#1f3a93", "#27ae60", "#8e44ad", "#16a085",
];

fn y_of(position: usize) -> f64 {
    MARGIN + position as f64 * SPACING
}

fn curve(x0: f64, from: usize, to: usize) -> String {
    let x1 = x0 + COLUMN;
    let xm = x0 + COLUMN / 2.0;
    let (y0, y1) = (y_of(from), y_of(to));
    format!("M {x0} {y0} C {xm} {y0}, {xm} {y1}, {x1} {y1}")
}

pub fn render_diagram(word: &BraidWord, strand_count: usize) -> Result<String> {
    if strand_count < 2 {
        return Err(Error::InvalidConfig(format!(
            "a braid diagram needs at least 2 strands, got {strand_count}"
        )));
    }
    if let Some(l) = word
        .letters()
        .iter()
        .find(|l| l.index == 0 || l.index as usize >= strand_count)
    {
        return Err(Error::StrandOutOfRange {
            index: l.index as usize,
            strands: strand_count,
        });
    }

    let columns = word.len().max(1);
    let width = 2.0 * MARGIN + columns as f64 * COLUMN;
    let height = 2.0 * MARGIN + (strand_count - 1) as f64 * SPACING;

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    );
    let _ = writeln!(svg, r#"<rect width="100%" height="100%" fill="white"/>"#);
    let _ = writeln!(svg, r#"<title>{word}</title>"#);

    // strand ids by current position (0-based)
    let mut at: Vec<usize> = (0..strand_count).collect();
    let path = |svg: &mut String, d: &str, strand: usize| {
        let color = PALETTE[strand % PALETTE.len()];
        let _ = writeln!(
            svg,
            r#"  <path d="{d}" stroke="{color}" stroke-width="{STROKE}" fill="none"/>"#
        );
    };

    if word.is_empty() {
        let _ = writeln!(svg, r#"<g class="strands">"#);
        for (pos, &strand) in at.iter().enumerate() {
            let y = y_of(pos);
            let x1 = width - MARGIN;
            path(&mut svg, &format!("M {MARGIN} {y} L {x1} {y}"), strand);
        }
        let _ = writeln!(svg, "</g>");
    }

    for (col, letter) in word.letters().iter().enumerate() {
        let x0 = MARGIN + col as f64 * COLUMN;
        let top = letter.index as usize - 1;
        let bottom = top + 1;
        let _ = writeln!(
            svg,
            r#"<g class="crossing" data-column="{}" data-letter="{}">"#,
            col + 1,
            BraidWord::new(vec![*letter])
        );
        for (pos, &strand) in at.iter().enumerate() {
            if pos != top && pos != bottom {
                let y = y_of(pos);
                let x1 = x0 + COLUMN;
                path(&mut svg, &format!("M {x0} {y} L {x1} {y}"), strand);
            }
        }
        let down = curve(x0, top, bottom);
        let up = curve(x0, bottom, top);
        let (under, under_strand, over, over_strand) = match letter.sign {
            Sign::Pos => (up, at[bottom], down, at[top]),
            Sign::Neg => (down, at[top], up, at[bottom]),
        };
        path(&mut svg, &under, under_strand);
        let _ = writeln!(
            svg,
            r#"  <path d="{over}" stroke="white" stroke-width="{HALO}" fill="none"/>"#
        );
        path(&mut svg, &over, over_strand);
        let _ = writeln!(svg, "</g>");
        at.swap(top, bottom);
    }

    svg.push_str("</svg>\n");
    Ok(svg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::Letter;

    fn crossings(svg: &str) -> usize {
        svg.matches(r#"class="crossing""#).count()
    }

    #[test]
    fn empty_word_draws_straight_strands() {
        let svg = render_diagram(&BraidWord::empty(), 3).unwrap();
        assert_eq!(crossings(&svg), 0);
        assert_eq!(svg.matches("<path").count(), 3);
        assert!(svg.starts_with("<svg"));
        assert!(svg.trim_end().ends_with("</svg>"));
    }

    #[test]
    fn single_crossing() {
        let svg = render_diagram(&BraidWord::new(vec![Letter::pos(1)]), 2).unwrap();
        assert_eq!(crossings(&svg), 1);
        assert!(svg.contains(r#"data-letter="s1""#));
        // over strand (from the top) is drawn last
        let last = svg.rfind("<path").unwrap();
        assert!(svg[last..].contains(PALETTE[0]));
    }

    #[test]
    fn inverse_crossing_puts_top_strand_under() {
        let svg = render_diagram(&BraidWord::new(vec![Letter::neg(1)]), 2).unwrap();
        let last = svg.rfind("<path").unwrap();
        assert!(svg[last..].contains(PALETTE[1]));
    }

    #[test]
    fn x_braid_has_22_columns() {
        let w: BraidWord = "s2^-2 s1^4 s2^-1 s1 s2^-1 s1 s2 s1^-2 s2 s1^-1 s2^-5 s1 s2^-1"
            .parse()
            .unwrap();
        let svg = render_diagram(&w, 3).unwrap();
        assert_eq!(crossings(&svg), 22);
    }

    #[test]
    fn rejects_indices_beyond_strands() {
        let w = BraidWord::new(vec![Letter::pos(2)]);
        assert!(matches!(
            render_diagram(&w, 2),
            Err(Error::StrandOutOfRange { index: 2, strands: 2 })
        ));
        assert!(render_diagram(&BraidWord::empty(), 1).is_err());
    }
}
