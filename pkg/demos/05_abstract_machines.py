"""
Two machines, one semantics
===========================

The continuation machine copies continuations into a soup; the history
machine only records choices and restarts.  They must agree.
"""

from thermocont import machine
from thermocont.machine import gen_term

t = machine.parse_term("(let x (num 1) (let y (num 2) (let z (choose x y) (succ (var z)))))")
print(machine.format_term(t))
print(machine.run_cont(t), machine.run_hist(t))

# Every configuration the history machine passes through
for cfg in machine.iter_hist(t):
    if isinstance(cfg, machine.Final):
        print("   final", machine.format_results(cfg.result))
    else:
        print(f"   {machine.format_term(cfg.term):<40} past={cfg.past} future={cfg.future} result={cfg.result}")

# Random closed terms
agree = sum(machine.differential_check(gen_term(seed, 12)) for seed in range(1000))
print(agree, "/ 1000 agree")

sizes = [len(machine.run_hist(gen_term(seed, 12))) for seed in range(1000)]
print("results per term, max:", max(sizes), "mean:", sum(sizes) / len(sizes))
