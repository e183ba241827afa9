#include "esflux/reference.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <sstream>

#include "esflux/timeint.hpp"

namespace esflux {

namespace {

constexpr char kMagic[8] = {'E', 'S', 'F', 'X', 'R', 'E', 'F', '\0'};
constexpr std::uint32_t kVersion = 1;
const std::string kSchemeTag = "eno2-lxf-ssprk33";

void put_u64(std::ostream& out, std::uint64_t v) {
  char b[8];
  for (int i = 0; i < 8; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xff);
  out.write(b, 8);
}

std::uint64_t get_u64(std::istream& in) {
  unsigned char b[8];
  if (!in.read(reinterpret_cast<char*>(b), 8)) throw IoError("truncated reference file");
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(b[i]) << (8 * i);
  return v;
}

void put_f64(std::ostream& out, double v) { put_u64(out, std::bit_cast<std::uint64_t>(v)); }
double get_f64(std::istream& in) { return std::bit_cast<double>(get_u64(in)); }

void put_str(std::ostream& out, const std::string& s) {
  put_u64(out, s.size());
  out.write(s.data(), static_cast<std::streamsize>(s.size()));
}

std::string get_str(std::istream& in) {
  const auto n = get_u64(in);
  if (n > 4096) throw IoError("corrupt string in reference file");
  std::string s(n, '\0');
  if (!in.read(s.data(), static_cast<std::streamsize>(n))) throw IoError("truncated reference file");
  return s;
}

}  // namespace

FaceValues eno2_reconstruct(double u_left, double u_centre, double u_right) {
  const double dl = u_centre - u_left;
  const double dr = u_right - u_centre;
  const double slope = std::abs(dl) <= std::abs(dr) ? dl : dr;
  return {u_centre - 0.5 * slope, u_centre + 0.5 * slope};
}

Eno2Burgers::Eno2Burgers(Grid1D grid, Boundary left, Boundary right)
    : grid_(grid), left_(std::move(left)), right_(std::move(right)) {
  if ((left_.kind == BoundaryKind::periodic) != (right_.kind == BoundaryKind::periodic)) {
    throw ConfigError("periodic boundaries must be set on both sides");
  }
  if (grid_.n < kHalo) throw GridTooSmall("ENO2 needs at least two cells");
}

std::vector<double> Eno2Burgers::fill_ghosts(std::span<const double> u, double t) const {
  const int n = grid_.n;
  if (u.size() != static_cast<std::size_t>(n)) throw Error("state size does not match grid");
  std::vector<double> ext(n + 2 * kHalo);
  std::copy(u.begin(), u.end(), ext.begin() + kHalo);
  auto cell = [&](int c) -> double& { return ext[c + kHalo - 1]; };
  switch (left_.kind) {
    case BoundaryKind::periodic:
      cell(0) = cell(n);
      cell(-1) = cell(n - 1);
      break;
    case BoundaryKind::reflective:
      cell(0) = -cell(1);
      cell(-1) = -cell(2);
      break;
    case BoundaryKind::inflow:
      cell(0) = left_.inflow_state(t)(0);
      cell(-1) = 2.0 * cell(0) - cell(1);
      break;
    case BoundaryKind::outflow:
      cell(0) = cell(1);
      cell(-1) = cell(1);
      break;
  }
  switch (right_.kind) {
    case BoundaryKind::periodic:
      cell(n + 1) = cell(1);
      cell(n + 2) = cell(2);
      break;
    case BoundaryKind::reflective:
      cell(n + 1) = -cell(n);
      cell(n + 2) = -cell(n - 1);
      break;
    case BoundaryKind::inflow:
      cell(n + 1) = right_.inflow_state(t)(0);
      cell(n + 2) = 2.0 * cell(n + 1) - cell(n);
      break;
    case BoundaryKind::outflow:
      cell(n + 1) = cell(n);
      cell(n + 2) = cell(n);
      break;
  }
  return ext;
}

std::vector<double> Eno2Burgers::interface_fluxes(std::span<const double> ext) const {
  const int n = grid_.n;
  double lambda = 0.0;
  for (double v : ext) lambda = std::max(lambda, std::abs(v));
  std::vector<double> flux(n + 1);
  // ext index of cell c is c + 1; interface i sits between cells i and i+1.
  for (int i = 0; i <= n; ++i) {
    const double minus = eno2_reconstruct(ext[i], ext[i + 1], ext[i + 2]).right;
    const double plus = eno2_reconstruct(ext[i + 1], ext[i + 2], ext[i + 3]).left;
    flux[i] = 0.5 * (burgers_flux(minus) + burgers_flux(plus)) - 0.5 * lambda * (plus - minus);
  }
  return flux;
}

void Eno2Burgers::rhs(std::span<const double> u, double t, std::span<double> out) const {
  const auto ext = fill_ghosts(u, t);
  const auto f = interface_fluxes(ext);
  const double inv_dx = 1.0 / grid_.dx();
  for (int k = 0; k < grid_.n; ++k) out[k] = (f[k] - f[k + 1]) * inv_dx;
}

std::vector<double> Eno2Burgers::rhs(std::span<const double> u, double t) const {
  std::vector<double> out(grid_.n);
  rhs(u, t, std::span<double>(out));
  return out;
}

std::filesystem::path reference_cache_path(const std::filesystem::path& dir,
                                           const std::string& problem, int n, double t_end) {
  std::ostringstream name;
  name << problem << "_N" << n << "_T" << t_end << "_" << kSchemeTag << "_v" << kVersion << ".bin";
  return dir / name.str();
}

void write_reference(const std::filesystem::path& path, const ReferenceField& field) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write " + tmp.string());
    out.write(kMagic, sizeof(kMagic));
    put_u64(out, kVersion);
    put_str(out, field.problem);
    put_u64(out, static_cast<std::uint64_t>(field.grid.n));
    put_f64(out, field.grid.a);
    put_f64(out, field.grid.b);
    put_u64(out, field.grid.layout == GridLayout::boundary_nodes ? 1 : 0);
    put_f64(out, field.t_end);
    put_str(out, kSchemeTag);
    for (double v : field.values) put_f64(out, v);
    if (!out) throw IoError("failed writing " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw IoError("cannot move " + tmp.string() + " into place: " + ec.message());
}

ReferenceField read_reference(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  char magic[8];
  if (!in.read(magic, 8) || !std::equal(magic, magic + 8, kMagic)) {
    throw IoError(path.string() + " is not a reference file");
  }
  if (get_u64(in) != kVersion) throw IoError(path.string() + ": unsupported version");
  ReferenceField f;
  f.problem = get_str(in);
  const auto n = static_cast<int>(get_u64(in));
  const double a = get_f64(in);
  const double b = get_f64(in);
  const auto layout = get_u64(in) == 1 ? GridLayout::boundary_nodes : GridLayout::cell_centered;
  f.grid = Grid1D(n, a, b, layout);
  f.t_end = get_f64(in);
  if (get_str(in) != kSchemeTag) throw IoError(path.string() + ": different scheme");
  f.values.resize(n);
  for (auto& v : f.values) v = get_f64(in);
  return f;
}

ReferenceField reference_solution(const ScalarProblem& problem, int n_fine, double t_end,
                                  const ReferenceOptions& opts) {
  std::filesystem::path cache;
  if (!opts.cache_dir.empty()) {
    cache = reference_cache_path(opts.cache_dir, problem.id, n_fine, t_end);
    if (std::filesystem::exists(cache)) {
      auto f = read_reference(cache);
      if (f.problem == problem.id && f.grid.n == n_fine && f.t_end == t_end) return f;
    }
  }

  const Grid1D grid(n_fine, problem.a, problem.b, GridLayout::boundary_nodes);
  const Eno2Burgers eno(grid, problem.left_bc(), problem.right_bc());
  std::vector<double> u(n_fine);
  for (int k = 0; k < n_fine; ++k) u[k] = problem.initial(grid.center(k));

  TimeLoopConfig tc;
  tc.cfl = opts.cfl;
  tc.t_end = t_end;
  auto rhs = [&](std::span<const double> v, double t, std::span<double> out) { eno.rhs(v, t, out); };
  auto dt = [&](std::span<const double> v) {
    double s = 0.0;
    for (double x : v) s = std::max(s, std::abs(x));
    s = std::max({s, std::abs(problem.left(0.0)), std::abs(problem.right(0.0))});
    return s > 0.0 ? tc.cfl * grid.dx() / s : t_end;
  };
  auto res = integrate<double>(rhs, std::move(u), tc, dt);

  ReferenceField f{problem.id, grid, t_end, std::move(res.state)};
  if (!cache.empty()) {
    std::error_code ec;
    std::filesystem::create_directories(opts.cache_dir, ec);
    if (ec) throw IoError("cannot create cache directory " + opts.cache_dir.string() + ": " + ec.message());
    write_reference(cache, f);
  }
  return f;
}

double total_variation(std::span<const double> values) {
  double tv = 0.0;
  for (std::size_t i = 1; i < values.size(); ++i) tv += std::abs(values[i] - values[i - 1]);
  return tv;
}

}  // namespace esflux
