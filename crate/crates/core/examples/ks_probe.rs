fn main() {
    for z in [1.1799f64, 1.1801, 1.36, 1.63] {
        let q = twinsim::equivalence::kolmogorov_sf(z);
        println!("Q({z}) = {q}");
    }
}
