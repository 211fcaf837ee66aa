#include "walkclass/series.hpp"

#include "walkclass/modular.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace walkclass {

std::string spec_csv(const Spec& sp, int dim) {
    std::string out = std::to_string(sp[0]) + "," + std::to_string(sp[1]);
    if (dim == 3) out += "," + std::to_string(sp[2]);
    return out;
}

Spec parse_spec(const std::string& csv, int dim) {
    Spec sp{0, 0, 0};
    std::stringstream ss(csv);
    std::string tok;
    int i = 0;
    while (std::getline(ss, tok, ',')) {
        if (i >= dim) throw std::invalid_argument("spec has too many coordinates: " + csv);
        if (tok != "0" && tok != "1")
            throw std::invalid_argument("spec coordinates must be 0 or 1: " + csv);
        sp[i++] = tok == "1" ? 1 : 0;
    }
    if (i != dim) throw std::invalid_argument("spec has too few coordinates: " + csv);
    return sp;
}

namespace {

// Axis extent: if no step moves an axis up, walks never leave coordinate 0.
int axis_extent(const StepSet& s, int axis, int nmax) {
    for (const Step& st : s.steps)
        if (st[axis] > 0) return nmax;
    return 0;
}

void check_bound(const Int& an, const Int& bound, int n) {
    if (an > bound)
        throw std::logic_error("walk count exceeds |S|^n at n=" + std::to_string(n));
    if (an < 0) throw std::logic_error("negative walk count at n=" + std::to_string(n));
}

SeriesZ expand2_exact(const StepSet& s, const Spec& spec, int N) {
    const int ex = axis_extent(s, 0, N - 1), ey = axis_extent(s, 1, N - 1);
    const std::size_t W = ex + 1, H = ey + 1;
    std::vector<Int> cur(W * H), nxt(W * H);
    cur[0] = 1;

    SeriesZ out;
    out.a.reserve(N);
    Int bound = 1;
    for (int n = 0; n < N; ++n) {
        Int an = 0;
        if (spec[0] && spec[1]) {
            for (const Int& v : cur) an += v;
        } else if (spec[0]) {
            for (std::size_t i = 0; i < W; ++i) an += cur[i * H];
        } else if (spec[1]) {
            for (std::size_t j = 0; j < H; ++j) an += cur[j];
        } else {
            an = cur[0];
        }
        check_bound(an, bound, n);
        out.a.push_back(an);
        if (n + 1 == N) break;
        bound *= static_cast<long>(s.steps.size());

        const int xm = std::min(n + 1, ex), ym = std::min(n + 1, ey);
        for (int i = 0; i <= xm; ++i)
            for (int j = 0; j <= ym; ++j) {
                Int& v = nxt[i * H + j];
                v = 0;
                for (const Step& st : s.steps) {
                    const int pi = i - st[0], pj = j - st[1];
                    if (pi >= 0 && pi <= ex && pj >= 0 && pj <= ey) v += cur[pi * H + pj];
                }
            }
        std::swap(cur, nxt);
    }
    return out;
}

SeriesZ expand3_exact(const StepSet& s, const Spec& spec, int N) {
    const int ex = axis_extent(s, 0, N - 1), ey = axis_extent(s, 1, N - 1),
              ez = axis_extent(s, 2, N - 1);
    const std::size_t W = ex + 1, H = ey + 1, D = ez + 1;
    std::vector<Int> cur(W * H * D), nxt(W * H * D);
    cur[0] = 1;

    SeriesZ out;
    out.a.reserve(N);
    Int bound = 1;
    for (int n = 0; n < N; ++n) {
        Int an = 0;
        for (std::size_t i = 0; i < W; ++i) {
            if (!spec[0] && i) break;
            for (std::size_t j = 0; j < H; ++j) {
                if (!spec[1] && j) break;
                for (std::size_t k = 0; k < D; ++k) {
                    if (!spec[2] && k) break;
                    an += cur[(i * H + j) * D + k];
                }
            }
        }
        check_bound(an, bound, n);
        out.a.push_back(an);
        if (n + 1 == N) break;
        bound *= static_cast<long>(s.steps.size());

        const int xm = std::min(n + 1, ex), ym = std::min(n + 1, ey),
                  zm = std::min(n + 1, ez);
        for (int i = 0; i <= xm; ++i)
            for (int j = 0; j <= ym; ++j)
                for (int k = 0; k <= zm; ++k) {
                    Int& v = nxt[(i * H + j) * D + k];
                    v = 0;
                    for (const Step& st : s.steps) {
                        const int pi = i - st[0], pj = j - st[1], pk = k - st[2];
                        if (pi >= 0 && pi <= ex && pj >= 0 && pj <= ey && pk >= 0 &&
                            pk <= ez)
                            v += cur[((pi * H + pj) * D + pk)];
                    }
                }
        std::swap(cur, nxt);
    }
    return out;
}

// One slice of uint64 residues per prime, primes processed sequentially.
std::vector<uint64_t> expand3_residues(const StepSet& s, const Spec& spec, int N,
                                       uint64_t p) {
    const int ex = axis_extent(s, 0, N - 1), ey = axis_extent(s, 1, N - 1),
              ez = axis_extent(s, 2, N - 1);
    const std::size_t W = ex + 1, H = ey + 1, D = ez + 1;
    std::vector<uint64_t> cur(W * H * D, 0), nxt(W * H * D, 0);
    cur[0] = 1;

    std::vector<uint64_t> out;
    out.reserve(N);
    for (int n = 0; n < N; ++n) {
        uint64_t an = 0;
        for (std::size_t i = 0; i < W; ++i) {
            if (!spec[0] && i) break;
            for (std::size_t j = 0; j < H; ++j) {
                if (!spec[1] && j) break;
                for (std::size_t k = 0; k < D; ++k) {
                    if (!spec[2] && k) break;
                    an = add_mod(an, cur[(i * H + j) * D + k], p);
                }
            }
        }
        out.push_back(an);
        if (n + 1 == N) break;

        const int xm = std::min(n + 1, ex), ym = std::min(n + 1, ey),
                  zm = std::min(n + 1, ez);
        for (int i = 0; i <= xm; ++i)
            for (int j = 0; j <= ym; ++j)
                for (int k = 0; k <= zm; ++k) {
                    uint64_t v = 0;
                    for (const Step& st : s.steps) {
                        const int pi = i - st[0], pj = j - st[1], pk = k - st[2];
                        if (pi >= 0 && pi <= ex && pj >= 0 && pj <= ey && pk >= 0 &&
                            pk <= ez)
                            v = add_mod(v, cur[((pi * H + pj) * D + pk)], p);
                    }
                    nxt[(i * H + j) * D + k] = v;
                }
        std::swap(cur, nxt);
    }
    return out;
}

SeriesZ expand3_crt(const StepSet& s, const Spec& spec, int N) {
    // Enough primes that the modulus exceeds |S|^N.
    const double bits_needed = N * std::log2(double(s.steps.size())) + 2;
    const int nprimes = std::max(1, static_cast<int>(bits_needed / 61.0) + 1);

    GuessPrimeStream ps;
    std::vector<uint64_t> primes;
    std::vector<std::vector<uint64_t>> res;
    for (int i = 0; i < nprimes; ++i) {
        const uint64_t p = ps.next();
        primes.push_back(p);
        res.push_back(expand3_residues(s, spec, N, p));
    }

    SeriesZ out;
    out.a.reserve(N);
    Int bound = 1;
    std::vector<uint64_t> rn(nprimes);
    for (int n = 0; n < N; ++n) {
        for (int i = 0; i < nprimes; ++i) rn[i] = res[i][n];
        Int an = crt_combine(rn, primes);
        check_bound(an, bound, n);
        out.a.push_back(an);
        bound *= static_cast<long>(s.steps.size());
    }
    return out;
}

} // namespace

SeriesZ expand_counts(const StepSet& s, const Spec& spec, int N) {
    if (N <= 0) throw std::invalid_argument("need at least one term");
    if (s.steps.empty()) {
        SeriesZ out;
        out.a.assign(N, 0);
        out.a[0] = 1;
        return out;
    }
    if (s.dim == 2) return expand2_exact(s, spec, N);
    // Exact big-integer slices fit comfortably up to moderate N; beyond that
    // the modular engine keeps the footprint at 8 bytes per cell per pass.
    if (N <= 150) return expand3_exact(s, spec, N);
    return expand3_crt(s, spec, N);
}

namespace {

void brute_dfs(const StepSet& s, const Spec& spec, int left, int x, int y, int z,
               Int& acc) {
    if (left == 0) {
        if ((spec[0] || x == 0) && (spec[1] || y == 0) && (spec[2] || z == 0)) acc += 1;
        return;
    }
    for (const Step& st : s.steps) {
        const int nx = x + st[0], ny = y + st[1], nz = z + st[2];
        if (nx >= 0 && ny >= 0 && nz >= 0) brute_dfs(s, spec, left - 1, nx, ny, nz, acc);
    }
}

} // namespace

Int brute_force_walks(const StepSet& s, const Spec& spec, int n) {
    if (n < 0) throw std::invalid_argument("negative walk length");
    if (n > 12) throw std::invalid_argument("brute force capped at n=12");
    Int acc = 0;
    brute_dfs(s, spec, n, 0, 0, 0, acc);
    return acc;
}

std::vector<DedupeClass> dedupe_by_prefix(const std::vector<StepSet>& sets,
                                          int prefix_len, const Spec& spec) {
    std::vector<DedupeClass> classes;
    for (const StepSet& s : sets) {
        SeriesZ ser = expand_counts(s, spec, prefix_len);
        DedupeClass* home = nullptr;
        for (DedupeClass& c : classes)
            if (c.prefix == ser.a) {
                home = &c;
                break;
            }
        if (!home) {
            classes.push_back(DedupeClass{});
            home = &classes.back();
            home->rep = s;
            home->prefix = ser.a;
            home->degenerate = true;
            for (int n = 1; n < prefix_len; ++n)
                if (ser.a[n] != 0) home->degenerate = false;
        }
        home->members.push_back(s);
        if (s.bits() < home->rep.bits()) home->rep = s;
    }
    std::sort(classes.begin(), classes.end(),
              [](const DedupeClass& a, const DedupeClass& b) {
                  return a.rep.bits() < b.rep.bits();
              });
    for (DedupeClass& c : classes)
        std::sort(c.members.begin(), c.members.end(),
                  [](const StepSet& a, const StepSet& b) { return a.bits() < b.bits(); });
    return classes;
}

std::string series_cache_name(const StepSet& s, const Spec& spec, int N) {
    std::string sp = spec_csv(spec, s.dim);
    for (char& ch : sp)
        if (ch == ',') ch = '_';
    return s.bits() + "." + sp + "." + std::to_string(N) + ".series";
}

void write_series_file(const std::string& path, const StepSet& s, const Spec& spec,
                       const SeriesZ& series) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary);
        if (!f) throw std::runtime_error("cannot write " + tmp);
        f << "# steps=" << s.bits() << " dim=" << s.dim << " spec="
          << spec_csv(spec, s.dim) << " N=" << series.terms() << "\n";
        for (const Int& v : series.a) f << v.get_str() << "\n";
        if (!f) throw std::runtime_error("short write to " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw std::runtime_error("cannot move " + tmp + " into place");
}

std::optional<SeriesZ> read_series_file(const std::string& path, const StepSet& s,
                                        const Spec& spec, int N) {
    std::ifstream f(path, std::ios::binary);
    if (!f) return std::nullopt;
    std::string header;
    if (!std::getline(f, header)) throw std::runtime_error("empty series file " + path);

    std::stringstream want;
    want << "# steps=" << s.bits() << " dim=" << s.dim << " spec="
         << spec_csv(spec, s.dim) << " N=" << N;
    if (header != want.str())
        throw std::runtime_error("series header mismatch in " + path + ": got \"" +
                                 header + "\", want \"" + want.str() + "\"");

    SeriesZ out;
    out.a.reserve(N);
    std::string line;
    while (std::getline(f, line)) {
        if (line.empty()) continue;
        out.a.emplace_back(line);
    }
    if (out.terms() != N)
        throw std::runtime_error("series file " + path + " has " +
                                 std::to_string(out.terms()) + " terms, header says " +
                                 std::to_string(N));
    return out;
}

} // namespace walkclass
