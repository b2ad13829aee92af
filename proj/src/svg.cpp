#include "fibmm/svg.hpp"

#include <sstream>
#include <utility>
#include <vector>

#include "fibmm/minmax.hpp"
#include "fibmm/textio.hpp"

namespace fibmm {

namespace {

constexpr int kSize = 800;

// Pixel coordinate with three decimals, from the exact milli-pixel
// count, so the output never depends on platform float formatting.
std::string milli_str(const mpz_class& rounded) {
    mpz_class whole, milli;
    mpz_fdiv_qr(whole.get_mpz_t(), milli.get_mpz_t(), rounded.get_mpz_t(),
                mpz_class(1000).get_mpz_t());
    std::string frac = milli.get_str();
    frac.insert(0, 3 - frac.size(), '0');
    return whole.get_str() + "." + frac;
}

std::string px(const Rational& v, const Rational& scale) {
    const Rational scaled = v * scale * Rational(1000);
    return milli_str((scaled + Rational(1, 2)).floor());
}

std::string px_x(const Rational& x, const Rational& span) { return px(x, Rational(kSize) / span); }

std::string px_y(const Rational& y, const Rational& span) {
    return px(Rational(span) - y, Rational(kSize) / span);  // flip: SVG y grows downwards
}

}  // namespace

std::string envelope_svg(const Pwl& envelope) {
    const Rational span(1, 2);
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kSize << "\" height=\"" << kSize
        << "\" viewBox=\"0 0 " << kSize << " " << kSize << "\">\n";
    out << "<rect width=\"" << kSize << "\" height=\"" << kSize
        << "\" fill=\"white\" stroke=\"black\"/>\n";

    // Reference line y = (phi-1)/(phi+2); the pixel row comes from the
    // exact surd, the comment carries a 30-digit decimal.
    {
        const Surd ref = d1_limit();
        const Surd milli = (Surd(Rational(kSize)) - Surd(Rational(2 * kSize)) * ref) *
                               Surd(Rational(1000)) +
                           Surd(Rational(1, 2));
        const std::string ypix = milli_str(milli.floor());
        out << "<line x1=\"0\" y1=\"" << ypix << "\" x2=\"" << kSize << "\" y2=\"" << ypix
            << "\" stroke=\"#c00000\" stroke-dasharray=\"6,4\"/>\n";
        out << "<!-- reference (phi-1)/(phi+2) = " << decimal_str(ref, 30) << " -->\n";
    }

    out << "<polyline fill=\"none\" stroke=\"#2040c0\" stroke-width=\"1.5\" points=\"";
    for (size_t i = 0; i < envelope.xs().size(); ++i) {
        if (i) out << " ";
        out << px_x(envelope.xs()[i], span) << "," << px_y(envelope.ys()[i], span);
    }
    out << "\"/>\n";

    const Pwl::Extremum ext = envelope.global_max();
    for (const Rational& x : ext.argmax) {
        out << "<circle cx=\"" << px_x(x, span) << "\" cy=\"" << px_y(ext.value, span)
            << "\" r=\"5\" fill=\"#c00000\"/>\n";
        out << "<!-- max at x=" << x.str() << " value=" << ext.value.str() << " -->\n";
    }
    out << "</svg>\n";
    return out.str();
}

std::string planar_svg(const FibCache& cache, int N, const PlanarResult& result) {
    const Rational span(1);
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kSize << "\" height=\"" << kSize
        << "\" viewBox=\"0 0 " << kSize << " " << kSize << "\">\n";
    out << "<rect width=\"" << kSize << "\" height=\"" << kSize
        << "\" fill=\"white\" stroke=\"black\"/>\n";

    // Zero lines a x + b y = m for integer m, clipped to the square.
    for (int n = 1; n <= N; ++n) {
        const LinearForm f = form_for(cache, n);
        for (long long m = 0; m <= f.a + f.b; ++m) {
            // Intersect with the square boundary: collect the at most two
            // endpoints among the four edges.
            std::vector<std::pair<Rational, Rational>> ends;
            auto try_point = [&](const Rational& x, const Rational& y) {
                if (x < Rational(0) || x > Rational(1) || y < Rational(0) || y > Rational(1)) return;
                for (const auto& e : ends)
                    if (e.first == x && e.second == y) return;
                ends.emplace_back(x, y);
            };
            if (f.b != 0) {
                try_point(Rational(0), Rational(m, f.b));
                try_point(Rational(1), Rational(m - f.a, f.b));
            }
            if (f.a != 0) {
                try_point(Rational(m, f.a), Rational(0));
                try_point(Rational(m - f.b, f.a), Rational(1));
            }
            if (ends.size() < 2) continue;
            out << "<line x1=\"" << px_x(ends[0].first, span) << "\" y1=\""
                << px_y(ends[0].second, span) << "\" x2=\"" << px_x(ends[1].first, span)
                << "\" y2=\"" << px_y(ends[1].second, span)
                << "\" stroke=\"#708090\" stroke-width=\"0.8\"/>\n";
        }
    }

    for (size_t i = 0; i < result.maximizers.size(); ++i) {
        const PlanarPoint& p = result.maximizers[i];
        out << "<circle cx=\"" << px_x(p.x, span) << "\" cy=\"" << px_y(p.y, span)
            << "\" r=\"6\" fill=\"#c00000\"/>\n";
        out << "<!-- max at (" << p.x.str() << ", " << p.y.str() << ") value=" << result.t.str()
            << " -->\n";
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace fibmm
