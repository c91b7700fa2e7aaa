#include "wsg/plot.hpp"

#include <sstream>
#include <stdexcept>

namespace wsg {

namespace {

constexpr long kUnit = 24;
constexpr long kMargin = 30;
constexpr long kRadius = 6;

}  // namespace

std::string plot_svg(const Semigroup& sg, const Box& box) {
    if (sg.m() != 2) throw std::invalid_argument("plot requires m = 2, description has m = " + std::to_string(sg.m()));
    require_length(box.lower(), 2, "box");
    const long x0 = box.lower()[0].get_si(), x1 = box.upper()[0].get_si();
    const long y0 = box.lower()[1].get_si(), y1 = box.upper()[1].get_si();
    const long width = (x1 - x0) * kUnit + 2 * kMargin;
    const long height = (y1 - y0) * kUnit + 2 * kMargin;
    auto px = [&](long x) { return kMargin + (x - x0) * kUnit; };
    auto py = [&](long y) { return kMargin + (y1 - y) * kUnit; };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
       << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    os << "<g stroke=\"#dddddd\" stroke-width=\"1\">\n";
    for (long x = x0; x <= x1; ++x)
        os << "<line x1=\"" << px(x) << "\" y1=\"" << py(y1) << "\" x2=\"" << px(x) << "\" y2=\"" << py(y0) << "\"/>\n";
    for (long y = y0; y <= y1; ++y)
        os << "<line x1=\"" << px(x0) << "\" y1=\"" << py(y) << "\" x2=\"" << px(x1) << "\" y2=\"" << py(y) << "\"/>\n";
    os << "</g>\n<g stroke=\"black\" stroke-width=\"1.5\">\n";
    if (x0 <= 0 && 0 <= x1)
        os << "<line x1=\"" << px(0) << "\" y1=\"" << py(y1) << "\" x2=\"" << px(0) << "\" y2=\"" << py(y0) << "\"/>\n";
    if (y0 <= 0 && 0 <= y1)
        os << "<line x1=\"" << px(x0) << "\" y1=\"" << py(0) << "\" x2=\"" << px(x1) << "\" y2=\"" << py(0) << "\"/>\n";
    os << "</g>\n";

    std::ostringstream maximal, filled;
    box.for_each([&](const IntTuple& a) {
        if (!sg.member(a)) return;
        const long x = a[0].get_si(), y = a[1].get_si();
        auto& target = sg.is_maximal(a) ? maximal : filled;
        target << "<circle cx=\"" << px(x) << "\" cy=\"" << py(y) << "\" r=\"" << kRadius << "\" data-alpha=\""
               << a.to_string() << "\"/>\n";
    });
    os << "<g class=\"maximal\" fill=\"white\" stroke=\"black\" stroke-width=\"1.5\">\n" << maximal.str() << "</g>\n";
    os << "<g class=\"member\" fill=\"black\">\n" << filled.str() << "</g>\n";
    os << "</svg>\n";
    return os.str();
}

}  // namespace wsg
