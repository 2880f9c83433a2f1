#!/usr/bin/env python3
"""Writes src/lebedev_rules.cpp with Lebedev sphere rules (unit vectors, weights summing to 4 pi)."""
import sys
import numpy as np
from scipy.integrate import lebedev_rule

ORDERS = [17, 29, 41, 59]


def main(path):
    out = ['// Generated by tools/gen_lebedev.py from scipy.integrate.lebedev_rule. Do not edit.',
           '#include "tat/recon.hpp"', '', '#include <stdexcept>', '', 'namespace tat {', '', 'namespace {', '']
    cases = []
    for deg in ORDERS:
        x, w = lebedev_rule(deg)
        npts = x.shape[1]
        out.append(f'const double kRule{npts}[][4] = {{')
        for i in range(npts):
            out.append('  {%.17g, %.17g, %.17g, %.17g},' % (x[0, i], x[1, i], x[2, i], w[i]))
        out.append('};')
        out.append('')
        cases.append((npts, deg))
    out += ['SphereRule make(const double (*rows)[4], int count, int degree) {', '  SphereRule r;',
            '  r.degree = degree;', '  for (int i = 0; i < count; ++i) {',
            '    r.directions.emplace_back(rows[i][0], rows[i][1], rows[i][2]);',
            '    r.weights.push_back(rows[i][3]);', '  }', '  return r;', '}', '', '}  // namespace', '',
            'std::vector<int> lebedev_sizes() { return {' + ', '.join(str(c[0]) for c in cases) + '}; }', '',
            'SphereRule lebedev(int points) {', '  switch (points) {']
    for npts, deg in cases:
        out.append(f'    case {npts}: return make(kRule{npts}, {npts}, {deg});')
    out += ['  }', '  throw std::invalid_argument("lebedev: unsupported point count");', '}', '',
            '}  // namespace tat', '']
    with open(path, 'w') as f:
        f.write('\n'.join(out))


if __name__ == '__main__':
    main(sys.argv[1] if len(sys.argv) > 1 else 'src/lebedev_rules.cpp')
