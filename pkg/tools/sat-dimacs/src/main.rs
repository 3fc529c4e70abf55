//! DIMACS CNF front-end printing SAT-competition style output.
//!
//! Usage: sat-dimacs <file.cnf>
//! Prints "s SATISFIABLE" plus "v" value lines, or "s UNSATISFIABLE".
//! Exit codes: 10 = SAT, 20 = UNSAT, 1 = error.

use std::env;
use std::fs;
use std::process::exit;

fn main() {
    let args: Vec<String> = env::args().collect();
    if args.len() < 2 {
        eprintln!("usage: sat-dimacs <file.cnf>");
        exit(1);
    }
    let text = match fs::read_to_string(&args[1]) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("cannot read {}: {}", args[1], e);
            exit(1);
        }
    };
    let mut solver: cadical::Solver = Default::default();
    let mut num_vars: i32 = 0;
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        if line.starts_with('p') {
            let parts: Vec<&str> = line.split_whitespace().collect();
            if parts.len() >= 3 {
                num_vars = parts[2].parse().unwrap_or(0);
            }
            continue;
        }
        let mut clause: Vec<i32> = Vec::new();
        for tok in line.split_whitespace() {
            let lit: i32 = match tok.parse() {
                Ok(v) => v,
                Err(_) => {
                    eprintln!("bad literal {:?}", tok);
                    exit(1);
                }
            };
            if lit == 0 {
                break;
            }
            clause.push(lit);
        }
        if !clause.is_empty() {
            solver.add_clause(clause);
        }
    }
    match solver.solve() {
        Some(true) => {
            println!("s SATISFIABLE");
            let mut line = String::from("v");
            for v in 1..=num_vars {
                let val = solver.value(v).unwrap_or(false);
                line.push(' ');
                line.push_str(&(if val { v } else { -v }).to_string());
                if line.len() > 72 && v < num_vars {
                    println!("{}", line);
                    line = String::from("v");
                }
            }
            line.push_str(" 0");
            println!("{}", line);
            exit(10);
        }
        Some(false) => {
            println!("s UNSATISFIABLE");
            exit(20);
        }
        None => {
            println!("s UNKNOWN");
            exit(1);
        }
    }
}
