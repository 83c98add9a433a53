#include "tmc/turtle.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "tmc/kernels.hpp"

namespace tmc {

std::string GroupElement::to_string() const {
  return "(" + z.to_string() + ", " + u.to_string() + ")";
}

Interpreter::Interpreter(std::vector<GroupElement> images) : images_(std::move(images)) {
  if (images_.empty()) throw std::invalid_argument("interpreter: alphabet must be nonempty");
}

const GroupElement& Interpreter::operator[](Symbol a) const {
  if (a >= images_.size())
    throw std::out_of_range("interpreter: symbol " + std::to_string(a) + " outside alphabet of size " +
                            std::to_string(images_.size()));
  return images_[a];
}

bool Interpreter::is_absolute() const {
  return std::all_of(images_.begin(), images_.end(), [](const GroupElement& g) { return g.u.is_one(); });
}

GroupElement s_word(const Interpreter& interp, const Word& w) {
  GroupElement acc = GroupElement::identity();
  for (Symbol s : w.symbols()) acc += interp[s];
  return acc;
}

CycNumber p_word(const Interpreter& interp, const Word& w) { return s_word(interp, w).z; }

RootOfUnity alpha_word(const Interpreter& interp, const Word& w) {
  RootOfUnity acc;
  for (Symbol s : w.symbols()) acc *= interp[s].u;
  return acc;
}

TurtleCurve::TurtleCurve(SequenceSpec spec, Interpreter interp)
    : spec_(spec), interp_(std::move(interp)) {
  if (interp_.alphabet_size() != spec_.alphabet_size())
    throw std::invalid_argument("turtle curve: interpreter covers " +
                                std::to_string(interp_.alphabet_size()) + " symbols but " +
                                spec_.name() + " uses " + std::to_string(spec_.alphabet_size()));
}

double TurtleCurve::max_step() const {
  double best = 0.0;
  for (const auto& g : interp_.images())
    best = std::max(best, g.z.embed(mpq_class(1, 1u << 30)).modulus.upper.get_d());
  return best;
}

std::string TurtleCurve::describe() const {
  std::string out = "(" + spec_.name() + "; ";
  for (std::size_t a = 0; a < interp_.images().size(); ++a) {
    if (a) out += ", ";
    out += "τ(" + spec_.format_symbol(static_cast<Symbol>(a)) + ")=" + interp_.images()[a].to_string();
  }
  return out + ")";
}

CurveScan::CurveScan(const TurtleCurve& curve) : curve_(&curve) {
  for (const auto& g : curve.interpreter().images())
    heading_order_ = std::lcm(heading_order_, g.u.order());
  conductor_ = heading_order_;
  for (const auto& g : curve.interpreter().images()) conductor_ = std::lcm(conductor_, g.z.conductor());
  position_ = CycNumber().lifted(conductor_);
  rotated_.resize(static_cast<std::size_t>(curve.interpreter().alphabet_size()) * heading_order_);
}

const CycNumber& CurveScan::step_for(Symbol a) {
  const std::uint64_t h = heading_.exponent() * (heading_order_ / heading_.order());
  auto& slot = rotated_[a * heading_order_ + h];
  if (!slot) slot = curve_->interpreter()[a].z.rotated(heading_).lifted(conductor_);
  return *slot;
}

void CurveScan::advance() {
  const Symbol a = curve_->spec().at(index_);
  position_ += step_for(a);
  heading_ *= curve_->interpreter()[a].u;
  ++index_;
}

void CurveScan::advance_to(std::uint64_t n) {
  if (n < index_) throw std::logic_error("CurveScan: cannot move backwards");
  while (index_ < n) advance();
}

CycNumber curve_point(const TurtleCurve& curve, std::uint64_t n) {
  CurveScan scan(curve);
  scan.advance_to(n);
  return scan.position();
}

std::vector<CycNumber> curve_points(const TurtleCurve& curve, std::uint64_t n) {
  std::vector<CycNumber> out;
  out.reserve(n + 1);
  CurveScan scan(curve);
  out.push_back(scan.position());
  for (std::uint64_t i = 0; i < n; ++i) {
    scan.advance();
    out.push_back(scan.position());
  }
  return out;
}

SegmentSet SegmentSet::from_points(const std::vector<std::complex<double>>& points, double error_budget) {
  if (points.empty()) throw std::invalid_argument("SegmentSet: no points");
  SegmentSet out;
  out.error_budget = error_budget;
  if (points.size() == 1) {
    out.segments.push_back({points[0], points[0]});
    return out;
  }
  out.segments.reserve(points.size() - 1);
  for (std::size_t i = 0; i + 1 < points.size(); ++i) out.segments.push_back({points[i], points[i + 1]});
  return out;
}

SegmentSet polyline_from_points(const std::vector<CycNumber>& points, const mpq_class& width) {
  std::vector<Embedding> emb = parallel::embed_points(points, width);
  std::vector<std::complex<double>> pts(emb.size());
  double budget = 0.0;
  for (std::size_t i = 0; i < emb.size(); ++i) {
    pts[i] = emb[i].value;
    budget = std::max(budget, emb[i].error);
  }
  return SegmentSet::from_points(pts, budget);
}

SegmentSet polyline(const TurtleCurve& curve, std::uint64_t n, const mpq_class& width) {
  if (n == 0) throw std::invalid_argument("polyline: need at least one step");
  return polyline_from_points(curve_points(curve, n), width);
}

}  // namespace tmc
