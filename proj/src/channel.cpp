// Copyright 2026 The qdiv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qdiv/channel.hpp"

#include <cmath>

#include "qdiv/errors.hpp"
#include "qdiv/random.hpp"

namespace qdiv {

CVector vec(const CMatrix& x) {
  return Eigen::Map<const CVector>(x.data(), x.size());
}

CMatrix unvec(const CVector& v, Index rows, Index cols) {
  return Eigen::Map<const CMatrix>(v.data(), rows, cols);
}

namespace {

Index int_sqrt(Index n) {
  Index r = static_cast<Index>(std::llround(std::sqrt(static_cast<double>(n))));
  if (r * r != n)
    throw DimensionMismatch("superoperator size is not a perfect square");
  return r;
}

// image of the matrix unit E_ij
CMatrix image_of_unit(const CMatrix& super, Index dout, Index din, Index i,
                      Index j) {
  return unvec(super.col(i + j * din), dout, dout);
}

}  // namespace

double tp_defect(const Channel& ch) {
  const Index din = ch.dim_in(), dout = ch.dim_out();
  const CMatrix& s = ch.superoperator();
  double worst = 0.0;
  for (Index j = 0; j < din; ++j)
    for (Index i = 0; i < din; ++i) {
      Complex tr = 0.0;
      for (Index r = 0; r < dout; ++r) tr += s(r + r * dout, i + j * din);
      worst = std::max(worst, std::abs(tr - (i == j ? 1.0 : 0.0)));
    }
  return worst;
}

double hp_defect(const Channel& ch) {
  const Index din = ch.dim_in(), dout = ch.dim_out();
  const CMatrix& s = ch.superoperator();
  double worst = 0.0;
  for (Index j = 0; j < din; ++j)
    for (Index i = j; i < din; ++i) {
      CMatrix a = image_of_unit(s, dout, din, i, j);
      CMatrix b = image_of_unit(s, dout, din, j, i);
      worst = std::max(worst, max_abs(b - a.adjoint()));
    }
  return worst;
}

Channel::Channel(CMatrix super, Index dim_in, Index dim_out)
    : super_(std::move(super)), dim_in_(dim_in), dim_out_(dim_out) {
  if (dim_in < 1 || dim_out < 1 || super_.rows() != dim_out * dim_out ||
      super_.cols() != dim_in * dim_in)
    throw DimensionMismatch("superoperator shape does not match dimensions");
  tp_ = tp_defect(*this) <= kChannelTol;
  hp_ = hp_defect(*this) <= kChannelTol;
}

Channel Channel::from_superoperator(CMatrix super) {
  Index dout = int_sqrt(super.rows());
  Index din = int_sqrt(super.cols());
  return Channel(std::move(super), din, dout);
}

Channel Channel::from_kraus(std::vector<CMatrix> kraus) {
  if (kraus.empty()) throw DimensionMismatch("empty Kraus list");
  const Index dout = kraus.front().rows(), din = kraus.front().cols();
  CMatrix super = CMatrix::Zero(dout * dout, din * din);
  for (const CMatrix& k : kraus) {
    if (k.rows() != dout || k.cols() != din)
      throw DimensionMismatch("Kraus operators of unequal shape");
    super += kron(k.conjugate(), k);
  }
  Channel ch(std::move(super), din, dout);
  ch.kraus_ = std::move(kraus);
  return ch;
}

Channel Channel::identity(Index d) {
  return from_kraus({CMatrix::Identity(d, d)});
}

Channel Channel::unitary(const CMatrix& u) { return from_kraus({u}); }

Channel Channel::transpose(Index d) {
  CMatrix s = CMatrix::Zero(d * d, d * d);
  for (Index r = 0; r < d; ++r)
    for (Index c = 0; c < d; ++c) s(c + r * d, r + c * d) = 1.0;
  return Channel(std::move(s), d, d);
}

CMatrix Channel::apply(const CMatrix& x) const {
  if (x.rows() != dim_in_ || x.cols() != dim_in_)
    throw DimensionMismatch("input dimension does not match channel");
  return unvec(super_ * vec(x), dim_out_, dim_out_);
}

CMatrix Channel::apply_kraus(const CMatrix& x) const {
  if (!kraus_) return apply(x);
  if (x.rows() != dim_in_ || x.cols() != dim_in_)
    throw DimensionMismatch("input dimension does not match channel");
  CMatrix out = CMatrix::Zero(dim_out_, dim_out_);
  for (const CMatrix& k : *kraus_) out += k * x * k.adjoint();
  return out;
}

HermitianOperator apply(const Channel& ch, const HermitianOperator& x) {
  return hermitian_part(ch.apply(x.matrix()));
}

Channel linear_combination(const std::vector<double>& weights,
                           const std::vector<const Channel*>& channels) {
  if (weights.size() != channels.size() || channels.empty())
    throw DimensionMismatch("weights and channels differ in length");
  const Channel& first = *channels.front();
  CMatrix s = CMatrix::Zero(first.superoperator().rows(),
                            first.superoperator().cols());
  for (std::size_t j = 0; j < channels.size(); ++j) {
    if (channels[j]->superoperator().rows() != s.rows() ||
        channels[j]->superoperator().cols() != s.cols())
      throw DimensionMismatch("linear combination of unequal channels");
    s += weights[j] * channels[j]->superoperator();
  }
  return Channel(std::move(s), first.dim_in(), first.dim_out());
}

ChoiMatrix choi(const Channel& ch) {
  if (ch.dim_in() != ch.dim_out())
    throw DimensionMismatch("Choi matrix needs a square channel");
  const Index d = ch.dim_in();
  CMatrix c(d * d, d * d);
  for (Index j = 0; j < d; ++j)
    for (Index i = 0; i < d; ++i)
      c.block(i * d, j * d, d, d) =
          image_of_unit(ch.superoperator(), d, d, i, j);
  return ChoiMatrix(std::move(c));
}

bool is_cp(const Channel& ch, double tol) {
  ChoiMatrix c = choi(ch);
  return is_psd(hermitian_part(c.matrix()), tol);
}

ContractivityResult positivity_by_contractivity(const Channel& ch, int samples,
                                                std::uint64_t seed,
                                                double tol) {
  if (ch.dim_in() != ch.dim_out())
    throw DimensionMismatch("contractivity test needs a square channel");
  if (tp_defect(ch) > 1e-8)
    throw HypothesisViolated("contractivity test needs a trace-preserving map");
  if (hp_defect(ch) > 1e-8)
    throw HypothesisViolated(
        "contractivity test needs a Hermiticity-preserving map");

  const Index d = ch.dim_in();
  ContractivityResult res;
  auto test = [&](const HermitianOperator& x) {
    double before = trace_norm(x);
    double excess = trace_norm(apply(ch, x)) - before;
    ++res.tested;
    if (res.tested == 1 || excess > res.max_excess) res.max_excess = excess;
    if (excess > tol * std::max(1.0, before) && res.verdict) {
      res.verdict = false;
      res.witness = x;
    }
  };

  for (Index i = 0; i < d && res.verdict; ++i) {
    CVector e = CVector::Unit(d, i);
    test(HermitianOperator::projector(e));
  }
  for (Index i = 0; i < d && res.verdict; ++i)
    for (Index j = i + 1; j < d && res.verdict; ++j)
      test(HermitianOperator::unit_difference(d, i, j));

  Rng rng(seed);
  for (int s = 0; s < samples && res.verdict; ++s) {
    if (s % 2 == 0)
      test(random_hermitian(d, rng));
    else
      test(random_projector_difference(d, rng));
  }
  return res;
}

Channel compose(const Channel& a, const Channel& b) {
  if (a.dim_in() != b.dim_out())
    throw DimensionMismatch("composition of incompatible channels");
  std::optional<std::vector<CMatrix>> kraus;
  if (a.kraus() && b.kraus() &&
      a.kraus()->size() * b.kraus()->size() <= 64) {
    std::vector<CMatrix> ks;
    for (const CMatrix& ka : *a.kraus())
      for (const CMatrix& kb : *b.kraus()) ks.push_back(ka * kb);
    return Channel::from_kraus(std::move(ks));
  }
  return Channel(a.superoperator() * b.superoperator(), b.dim_in(),
                 a.dim_out());
}

RVector singular_values(const Channel& ch) {
  Eigen::BDCSVD<CMatrix> svd(ch.superoperator());
  return svd.singularValues();
}

Channel inverse(const Channel& ch, double rcond) {
  if (ch.dim_in() != ch.dim_out())
    throw DimensionMismatch("inverse needs a square channel");
  RVector sv = singular_values(ch);
  if (sv.size() == 0 || sv(sv.size() - 1) < rcond * sv(0))
    throw SingularChannel(std::vector<double>(sv.data(), sv.data() + sv.size()),
                          rcond);
  return Channel(ch.superoperator().partialPivLu().inverse(), ch.dim_in(),
                 ch.dim_out());
}

Channel extend(const Channel& ch, Index m) {
  if (ch.dim_in() != ch.dim_out())
    throw DimensionMismatch("extension needs a square channel");
  const Index d = ch.dim_in(), big = m * d;
  const CMatrix& s = ch.superoperator();
  CMatrix e = CMatrix::Zero(big * big, big * big);
  // kron(I_{m^2}, S) with rows and columns permuted to the vec order of
  // the m*d system
  for (Index b = 0; b < m; ++b)
    for (Index a = 0; a < m; ++a)
      for (Index j = 0; j < d; ++j)
        for (Index i = 0; i < d; ++i) {
          Index col = (a * d + i) + (b * d + j) * big;
          for (Index c = 0; c < d; ++c)
            for (Index r = 0; r < d; ++r)
              e((a * d + r) + (b * d + c) * big, col) = s(r + c * d, i + j * d);
        }
  return Channel(std::move(e), big, big);
}

CMatrix apply_extended(const Channel& ch, const CMatrix& y, Index m) {
  if (ch.dim_in() != ch.dim_out())
    throw DimensionMismatch("extension needs a square channel");
  const Index d = ch.dim_in();
  if (y.rows() != m * d || y.cols() != m * d)
    throw DimensionMismatch("extended input has the wrong dimension");
  CMatrix out(m * d, m * d);
  for (Index b = 0; b < m; ++b)
    for (Index a = 0; a < m; ++a)
      out.block(a * d, b * d, d, d) = ch.apply(y.block(a * d, b * d, d, d));
  return out;
}

HermitianOperator apply_extended(const Channel& ch, const HermitianOperator& y,
                                 Index m) {
  return hermitian_part(apply_extended(ch, y.matrix(), m));
}

double max_entry_distance(const Channel& a, const Channel& b) {
  if (a.superoperator().rows() != b.superoperator().rows() ||
      a.superoperator().cols() != b.superoperator().cols())
    throw DimensionMismatch("channels of different shape");
  return max_abs(a.superoperator() - b.superoperator());
}

}  // namespace qdiv
