#include "zknead/census.hpp"

#include <omp.h>

#include <algorithm>
#include <array>
#include <chrono>
#include <cstring>
#include <numeric>
#include <set>
#include <tuple>

#include "json.hpp"
#include "zknead/error.hpp"

namespace zknead {

namespace detail {

void check_composition_bound(std::int64_t n) {
    if (n < 1) fail(errc::domain_error, "compositions: n must be >= 1");
    if (n > 40) fail(errc::domain_error, "compositions: n > 40 is past desk scale");
}

} // namespace detail

std::vector<Seq> compositions(std::int64_t n) {
    detail::check_composition_bound(n);
    std::vector<Seq> out;
    if (n <= 20) out.reserve(std::size_t{1} << (n - 1));
    for_each_composition(n, [&](const Seq& s) { out.push_back(s); });
    return out;
}

namespace {

class Timer {
public:
    double seconds() const {
        return std::chrono::duration<double>(clock::now() - start_).count();
    }

private:
    using clock = std::chrono::steady_clock;
    clock::time_point start_ = clock::now();
};

// ---------------------------------------------------------------------------
// OpenMP kernel. Sequences live in a fixed byte buffer with a sliding
// window; kneading is O(1) pointer moves at both ends plus an occasional
// recentering memmove. Entries and sums stay below 41, so int8 is enough
// and the continuant matrices fit comfortably in 64 bits.
// ---------------------------------------------------------------------------

constexpr int kCap = 192;
constexpr int kHome = 64;

struct Window {
    std::array<std::int8_t, kCap> buf;
    int lo = kHome;
    int hi = kHome;

    int size() const { return hi - lo; }

    void recenter() {
        const int len = size();
        std::memmove(buf.data() + kHome, buf.data() + lo, static_cast<std::size_t>(len));
        lo = kHome;
        hi = kHome + len;
    }
};

void decode_mask(std::uint64_t mask, std::int64_t n, Window& w) {
    w.lo = w.hi = kHome;
    std::int8_t run = 1;
    for (std::int64_t i = 0; i + 1 < n; ++i) {
        if (mask >> i & 1) {
            w.buf[w.hi++] = run;
            run = 1;
        } else {
            ++run;
        }
    }
    w.buf[w.hi++] = run;
}

void kernel_knead(Window& w) {
    const std::int8_t head = w.buf[w.lo++];
    if (w.size() > 0 && !(w.size() == 1 && w.buf[w.lo] == 1)) {
        if (w.buf[w.lo] >= 2) {
            w.buf[w.lo] -= 1;
            w.buf[--w.lo] = 1;
        } else {
            ++w.lo;
            w.buf[w.lo] += 1;
        }
    }
    if (w.size() > 0 && !(w.size() == 1 && w.buf[w.hi - 1] == 1)) {
        if (w.buf[w.hi - 1] >= 2) {
            w.buf[w.hi - 1] -= 1;
            w.buf[w.hi++] = 1;
        } else {
            --w.hi;
            w.buf[w.hi - 1] += 1;
        }
    }
    w.buf[w.hi++] = head;
    if (w.lo < 2 || w.hi > kCap - 3) w.recenter();
}

// -1 / 0 / +1 lexicographic comparison against the start snapshot.
int compare_window(const Window& w, const std::int8_t* start, int start_len) {
    const int len = w.size();
    const int common = len < start_len ? len : start_len;
    for (int i = 0; i < common; ++i) {
        const int d = int(w.buf[w.lo + i]) - int(start[i]);
        if (d != 0) return d < 0 ? -1 : 1;
    }
    return len == start_len ? 0 : (len < start_len ? -1 : 1);
}

struct FormTriple {
    std::int64_t A = 0, B = 0, C = 0, alternant = 0;
};

// Entries of the continuant matrix product give all four coefficients at once.
FormTriple continuant_form(const std::int8_t* q, int len) {
    std::int64_t full = 1, drop_last = 0, drop_first = 0, inner = 1;
    for (int i = 0; i < len; ++i) {
        const std::int64_t e = q[i];
        const std::int64_t f2 = e * full + drop_last;
        drop_last = full;
        full = f2;
        const std::int64_t g2 = e * drop_first + inner;
        inner = drop_first;
        drop_first = g2;
    }
    return {drop_first, full + inner, drop_last, full - inner};
}

CycleRecord finish_record(std::int64_t n, const std::int8_t* start, int start_len,
                          std::int64_t caliber) {
    CycleRecord rec;
    rec.sum = n;
    rec.caliber = caliber;
    rec.parity = start_len % 2 == 0 ? 0 : 1;
    rec.representative.assign(start, start + start_len);

    FormTriple first = continuant_form(start, start_len);
    rec.alternant = first.alternant;
    if (rec.parity == 1 && (rec.alternant == 1 || rec.alternant == 2)) {
        // excluded spec: no corresponding form
        rec.content = 0;
        return rec;
    }

    // walk the cycle once more for the form with the smallest middle
    // coefficient (ties by the leading one)
    FormTriple best = first;
    Window w;
    w.lo = kHome;
    w.hi = kHome + start_len;
    std::memcpy(w.buf.data() + kHome, start, static_cast<std::size_t>(start_len));
    for (std::int64_t step = 1; step < caliber; ++step) {
        kernel_knead(w);
        FormTriple cur = continuant_form(w.buf.data() + w.lo, w.size());
        if (std::tie(cur.B, cur.A) < std::tie(best.B, best.A)) best = cur;
    }
    std::int64_t d = std::gcd(std::gcd(best.A, best.B), best.C);
    rec.content = d;
    rec.primitive = QForm{best.A / d, best.B / d, best.C / d};
    return rec;
}

bool record_less(const CycleRecord& x, const CycleRecord& y) {
    auto key = [](const CycleRecord& r) {
        return std::tie(r.sum, r.caliber, r.content, r.primitive.A, r.primitive.B,
                        r.primitive.C);
    };
    if (key(x) != key(y)) return key(x) < key(y);
    return seq_less(x.representative, y.representative);
}

void census_range(std::int64_t n, std::int64_t mask_begin, std::int64_t mask_end,
                  std::optional<int> parity, std::vector<CycleRecord>& out) {
    Window w;
    std::array<std::int8_t, 48> start;
    for (std::int64_t mask = mask_begin; mask < mask_end; ++mask) {
        const int len = static_cast<int>(__builtin_popcountll(static_cast<std::uint64_t>(mask))) + 1;
        if (parity && (len % 2 == 0 ? 0 : 1) != *parity) continue;
        decode_mask(static_cast<std::uint64_t>(mask), n, w);
        std::memcpy(start.data(), w.buf.data() + w.lo, static_cast<std::size_t>(len));

        // expand only the lexicographic minimum of each cycle
        std::int64_t caliber = 0;
        int cmp;
        do {
            kernel_knead(w);
            ++caliber;
            cmp = compare_window(w, start.data(), len);
        } while (cmp > 0);
        if (cmp < 0) continue;
        out.push_back(finish_record(n, start.data(), len, caliber));
    }
}

} // namespace

std::vector<CycleRecord> cycle_census(std::int64_t n, const CensusOptions& opt) {
    detail::check_composition_bound(n);
    const std::int64_t total = std::int64_t{1} << (n - 1);
    const int workers = opt.workers > 0 ? opt.workers : omp_get_max_threads();

    std::vector<std::vector<CycleRecord>> parts(static_cast<std::size_t>(workers));
#pragma omp parallel num_threads(workers)
    {
        auto& local = parts[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(dynamic, 4096)
        for (std::int64_t mask = 0; mask < total; ++mask)
            census_range(n, mask, mask + 1, opt.parity, local);
    }

    std::vector<CycleRecord> out;
    for (auto& part : parts) {
        out.insert(out.end(), std::make_move_iterator(part.begin()),
                   std::make_move_iterator(part.end()));
        part.clear();
    }
    std::sort(out.begin(), out.end(), record_less);
    return out;
}

std::vector<CycleRecord> cycle_census_serial(std::int64_t n, const CensusOptions& opt) {
    detail::check_composition_bound(n);
    std::vector<CycleRecord> out;
    for_each_composition(n, [&](const Seq& s) {
        if (opt.parity && length_parity(s) != *opt.parity) return;

        Seq cur = knead(s);
        std::int64_t caliber = 1;
        while (cur != s) {
            if (seq_less(cur, s)) return;   // not the cycle minimum
            cur = knead(std::move(cur));
            ++caliber;
        }

        CycleRecord rec;
        rec.sum = n;
        rec.caliber = caliber;
        rec.parity = length_parity(s);
        rec.alternant = to_int64_checked(alternant(s));
        rec.representative = s;
        if (rec.parity == 1 && (rec.alternant == 1 || rec.alternant == 2)) {
            rec.content = 0;
        } else {
            QForm best = phi(s);
            Seq member = s;
            for (std::int64_t step = 1; step < caliber; ++step) {
                member = knead(std::move(member));
                QForm g = phi(member);
                if (std::tie(g.B, g.A) < std::tie(best.B, best.A)) best = g;
            }
            Int d = content(best);
            rec.content = to_int64_checked(d);
            rec.primitive = QForm{best.A / d, best.B / d, best.C / d};
        }
        out.push_back(std::move(rec));
    });
    std::sort(out.begin(), out.end(), record_less);
    return out;
}

int mobius(std::int64_t n) {
    if (n < 1) fail(errc::domain_error, "mobius: n must be >= 1");
    int factors = 0;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        n /= p;
        if (n % p == 0) return 0;
        ++factors;
    }
    if (n > 1) ++factors;
    return factors % 2 == 0 ? 1 : -1;
}

std::int64_t predicted_cycle_count(std::int64_t caliber) {
    if (caliber < 1 || caliber > 60)
        fail(errc::domain_error, "predicted_cycle_count: caliber out of range");
    std::int64_t sum = 0;
    for (std::int64_t d = 1; d <= caliber; d += 2) {
        if (caliber % d != 0) continue;
        sum += mobius(d) * (std::int64_t{1} << (caliber / d));
    }
    if (sum % (2 * caliber) != 0)
        fail(errc::internal_inconsistency, "predicted_cycle_count: sum not divisible by 2l");
    return sum / (2 * caliber);
}

VerifyReport verify_divisor_conjecture(std::int64_t n_max, const CensusOptions& opt) {
    Timer timer;
    VerifyReport rep;
    rep.conjecture = "divisor";
    rep.range_max = n_max;
    CensusOptions even = opt;
    even.parity = 0;
    for (std::int64_t n = 2; n <= n_max; ++n) {
        for (const CycleRecord& rec : cycle_census(n, even)) {
            ++rep.cycles_checked;
            const std::int64_t l = rec.caliber;
            if ((n - 1) % l != 0 || ((n - 1) / l) % 2 == 0) {
                rep.violations.push_back("sum " + std::to_string(n) + " cycle of " +
                                         format_seq(rec.representative) +
                                         ": n-1 is not an odd multiple of the caliber");
                continue;
            }
            const std::int64_t r = ((n - 1) / l - 1) / 2;
            if (r > 0 && rec.content <= 1)
                rep.violations.push_back("sum " + std::to_string(n) + " cycle of " +
                                         format_seq(rec.representative) +
                                         ": short cycle with primitive forms");
        }
    }
    rep.elapsed_seconds = timer.seconds();
    return rep;
}

VerifyReport verify_formula_conjecture(std::int64_t n_max, const CensusOptions& opt) {
    Timer timer;
    VerifyReport rep;
    rep.conjecture = "formula";
    rep.range_max = n_max;
    CensusOptions even = opt;
    even.parity = 0;
    for (std::int64_t n = 2; n <= n_max; ++n) {
        std::map<std::int64_t, std::int64_t> observed;   // caliber -> cycle count
        std::int64_t total_forms = 0;
        for (const CycleRecord& rec : cycle_census(n, even)) {
            ++rep.cycles_checked;
            ++observed[rec.caliber];
            total_forms += rec.caliber;
        }
        if (total_forms != std::int64_t{1} << (n - 2))
            rep.violations.push_back("sum " + std::to_string(n) +
                                     ": total form count != 2^(n-2)");
        for (std::int64_t l = 1; l <= n - 1; ++l) {
            if ((n - 1) % l != 0 || ((n - 1) / l) % 2 == 0) continue;
            const std::int64_t want = predicted_cycle_count(l);
            const auto it = observed.find(l);
            const std::int64_t got = it == observed.end() ? 0 : it->second;
            if (got != want)
                rep.violations.push_back("sum " + std::to_string(n) + " caliber " +
                                         std::to_string(l) + ": observed " +
                                         std::to_string(got) + ", predicted " +
                                         std::to_string(want));
        }
    }
    rep.elapsed_seconds = timer.seconds();
    return rep;
}

VerifyReport verify_composition_conjecture(std::int64_t a_max) {
    Timer timer;
    VerifyReport rep;
    rep.conjecture = "composition";
    rep.range_max = a_max;
    for (std::int64_t a = 3; a <= a_max; ++a) {
        const Int D = Int(a) * a - 4;
        const DiscSpec spec{a, 1};
        std::vector<FormClass> classes = class_list(D);
        std::vector<std::int64_t> sums, calibers;
        sums.reserve(classes.size());
        calibers.reserve(classes.size());
        for (const FormClass& c : classes) {
            sums.push_back(form_sum(c.representative, spec));
            calibers.push_back(class_caliber(c));
        }
        // target: the order-two class of (a-2, 3a-6, 2a-5); principal when a = 3
        const FormClass target = class_of(QForm{a - 2, 3 * a - 6, 2 * a - 5});
        const FormClass principal = principal_class(spec);
        rep.cycles_checked += static_cast<std::int64_t>(classes.size());

        for (std::size_t i = 0; i < classes.size(); ++i) {
            for (std::size_t j = 0; j < classes.size(); ++j) {
                if (!(compose(classes[i], classes[j]) == target)) continue;
                const std::string tag = "a=" + std::to_string(a) + " pair (" +
                                        format_form(classes[i].representative) + ") (" +
                                        format_form(classes[j].representative) + ")";
                if (sums[i] != sums[j]) {
                    rep.violations.push_back(tag + ": sums differ");
                    continue;
                }
                const std::int64_t n = sums[i];
                if (n > a) rep.violations.push_back(tag + ": sum exceeds a");
                if (calibers[i] + calibers[j] != n - 1)
                    rep.violations.push_back(tag + ": calibers do not add to n-1");
                if (!(classes[i] == principal) && !(classes[j] == principal)) {
                    if (calibers[i] < 2 || calibers[i] > n - 3 || calibers[j] < 2 ||
                        calibers[j] > n - 3)
                        rep.violations.push_back(tag + ": caliber outside [2, n-3]");
                }
            }
        }
    }
    rep.elapsed_seconds = timer.seconds();
    return rep;
}

VerifyReport sum_bound_check(std::int64_t a_max) {
    Timer timer;
    VerifyReport rep;
    rep.conjecture = "sum-bound";
    rep.range_max = a_max;
    for (std::int64_t a = 1; a <= a_max; ++a) {
        for (int s = 0; s <= 1; ++s) {
            if (s == 1 && a < 3) continue;
            const DiscSpec spec{a, s};
            const Int D = disc_of_spec(spec);
            const std::int64_t bound = s == 0 ? a + 1 : a;
            std::set<std::pair<Int, Int>> extremal;   // (B, A) keys of cycles allowed at the bound
            {
                QForm p = s == 0 ? QForm{1, a + 2, a} : QForm{1, a, 1};
                QForm pc = canonical_cycle_form(p);
                extremal.insert({pc.B, pc.A});
                if (s == 1 && a >= 4) {
                    QForm oc = canonical_cycle_form(QForm{a - 2, 3 * a - 6, 2 * a - 5});
                    extremal.insert({oc.B, oc.A});
                }
            }
            for (const CycleInfo& info : cycle_partition(D)) {
                ++rep.cycles_checked;
                const std::int64_t sum = form_sum(info.canonical, spec);
                const bool at_bound = sum == bound;
                const bool is_extremal =
                    extremal.count({info.canonical.B, info.canonical.A}) > 0;
                const std::string tag = "a=" + std::to_string(a) + " s=" + std::to_string(s) +
                                        " cycle of (" + format_form(info.canonical) + ")";
                if (sum > bound)
                    rep.violations.push_back(tag + ": sum exceeds the bound");
                else if (at_bound != is_extremal)
                    rep.violations.push_back(tag + ": equality cases are not exactly "
                                                   "principal (and the order-two class)");
            }
        }
    }
    rep.elapsed_seconds = timer.seconds();
    return rep;
}

std::vector<CycleRecord> short_cycle_table(std::int64_t sum_max, const CensusOptions& opt) {
    CensusOptions even = opt;
    even.parity = 0;
    std::vector<CycleRecord> out;
    for (std::int64_t n = 2; n <= sum_max; ++n)
        for (CycleRecord& rec : cycle_census(n, even))
            if (rec.caliber < n - 1) out.push_back(std::move(rec));
    return out;   // already sorted per sum; sums ascend across the loop
}

std::string records_to_csv(const std::vector<CycleRecord>& records) {
    std::string out = "sum_minus_1,caliber,d,A,B,C\n";
    for (const CycleRecord& r : records) {
        out += std::to_string(r.sum - 1) + "," + std::to_string(r.caliber) + "," +
               std::to_string(r.content) + "," + r.primitive.A.str() + "," +
               r.primitive.B.str() + "," + r.primitive.C.str() + "\n";
    }
    return out;
}

std::string report_to_json(const VerifyReport& report) {
    nlohmann::json j;
    j["conjecture"] = report.conjecture;
    j["range"] = report.range_max;
    j["violations"] = report.violations;
    j["cycles_checked"] = report.cycles_checked;
    j["elapsed"] = report.elapsed_seconds;
    return j.dump(2);
}

} // namespace zknead
