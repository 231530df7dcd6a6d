/*
   Copyright 2026 The gbcrypt authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// Compares the OpenMP kernels against their serial reference
// implementations: exact RREF over F_q and square-free Macaulay matrix
// construction.  Usage: bench_kernels [size] [q]

#include <chrono>
#include <cstdio>
#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "gbc/hydra.hpp"
#include "gbc/macaulay.hpp"

using namespace gbc;

namespace {

double seconds(std::chrono::steady_clock::time_point a, std::chrono::steady_clock::time_point b) {
    return std::chrono::duration<double>(b - a).count();
}

} // namespace

int main(int argc, char** argv) {
    std::size_t n = argc > 1 ? static_cast<std::size_t>(std::atol(argv[1])) : 1200;
    u128 q = argc > 2 ? parse_u128(argv[2]) : 7741;
    PrimeField f(q);
    Rng rng(12345);

#ifdef _OPENMP
    std::printf("openmp threads: %d\n", omp_get_max_threads());
#else
    std::printf("built without openmp; both columns run the serial kernel\n");
#endif

    // dense rref
    {
        DenseMatrix m(f, n, n + 8);
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) m.set(i, j, f.sample(rng));
        auto t0 = std::chrono::steady_clock::now();
        RrefResult serial = rref_serial(m);
        auto t1 = std::chrono::steady_clock::now();
        RrefResult parallel = rref(m);
        auto t2 = std::chrono::steady_clock::now();
        bool same = serial.reduced == parallel.reduced && serial.pivots == parallel.pivots;
        std::printf("rref %zux%zu mod %s: serial %.3fs  parallel %.3fs  speedup %.2fx  identical=%d\n",
                    m.rows(), m.cols(), to_string(q).c_str(), seconds(t0, t1), seconds(t1, t2),
                    seconds(t0, t1) / seconds(t1, t2), same ? 1 : 0);
    }

    // boolean Macaulay construction on a mid-size hydra instance
    {
        std::size_t rh = 5;
        HydraParams p = make_hydra_params(f, rh, 7);
        HydraWitness w = random_hydra_witness(p, 9);
        HydraSamplePair s = heads_sample(p, w.key, w.y, w.z);
        HydraModel model = hydra_build_model(p, s);
        AffineElimination elim = eliminate_affine(hydra_transform(model), model);
        HydraGb hgb = change_of_coordinates(model, elim);
        TermOrder drl = TermOrder::drl();
        int d = 5;
        auto t0 = std::chrono::steady_clock::now();
        MacaulayMatrix m = build_boolean_macaulay(hgb.extras, hgb.gb, d, drl);
        auto t1 = std::chrono::steady_clock::now();
        std::printf("boolean macaulay rH=%zu d=%d: %zux%zu built in %.3fs\n", rh, d, m.entries.rows(),
                    m.entries.cols(), seconds(t0, t1));
        auto t2 = std::chrono::steady_clock::now();
        RrefResult rr = rref(m.entries);
        auto t3 = std::chrono::steady_clock::now();
        std::printf("boolean macaulay elimination: rank %zu in %.3fs\n", rr.rank, seconds(t2, t3));
    }
    return 0;
}
