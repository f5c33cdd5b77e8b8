//! Rate-region geometry on hand-written constraint sets.

use zic_secrecy::region_geom::{
    area, contains, intersect, is_subset, vertices, Constraint, RatePair, RateRegion,
};

fn show(name: &str, r: &RateRegion) {
    let corners: Vec<String> = vertices(r)
        .iter()
        .map(|v| format!("({}, {})", v.r1, v.r2))
        .collect();
    println!("{name}: area {}, vertices {}", area(r), corners.join(" "));
}

fn main() -> zic_secrecy::Result<()> {
    let square = RateRegion::new(vec![Constraint::r1(4.0), Constraint::r2(4.0)])?;
    let pentagon = RateRegion::new(vec![
        Constraint::r1(4.0),
        Constraint::r2(4.0),
        Constraint::sum(6.0),
    ])?;
    let tilted = RateRegion::new(vec![
        Constraint::r1(4.0),
        Constraint::r2(4.0),
        Constraint::new(2.0, 1.0, 8.0),
    ])?;

    show("square", &square);
    show("pentagon", &pentagon);
    show("tilted", &tilted);
    show("pentagon and tilted", &intersect(&pentagon, &tilted));

    println!("pentagon inside square: {}", is_subset(&pentagon, &square));
    println!("square inside pentagon: {}", is_subset(&square, &pentagon));
    println!(
        "(3, 3) in pentagon: {}",
        contains(&pentagon, RatePair::new(3.0, 3.0))
    );

    // unbounded constraint sets are rejected up front
    println!("{}", RateRegion::new(vec![Constraint::r1(1.0)]).unwrap_err());
    Ok(())
}
