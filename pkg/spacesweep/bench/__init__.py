from spacesweep.bench.harness import BenchTarget, target_setup, default_s_grid, bench_instance, bench, write_csv
