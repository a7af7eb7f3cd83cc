from spacesweep.oracle.brute_force import bf_closest, bf_intersections, bf_axis_intersections, bf_measure
