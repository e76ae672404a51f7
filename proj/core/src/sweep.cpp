#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>

#include "sl12/certificate.hpp"
#include "sl12/errors.hpp"

namespace sl12 {
namespace {

SweepRow run_one(const Natural& q) {
  SweepRow row;
  row.q = q;
  const auto start = std::chrono::steady_clock::now();
  try {
    const auto pm = split_prime_power(q);
    if (!pm) throw Error("q = " + to_decimal(q) + " is not a prime power");
    const QValue Q = compute_Q(q);
    row.Q = Q.Q;
    row.halved = Q.halved;
    const Certificate cert = generate(pm->first, pm->second);
    row.checks = cert.generation.checks;
    row.conclusion = to_string(cert.generation.conclusion);
    const VerifyResult v = verify(cert);
    row.verified = v.pass();
    if (!v.pass() && cert.generation.q_class != QClass::excluded) row.error = v.messages.front();
  } catch (const BudgetError& e) {
    row.error = e.what();
    row.budget_exhausted = true;
  } catch (const std::exception& e) {
    row.error = e.what();
  }
  row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return row;
}

}  // namespace

std::vector<SweepRow> sweep(const std::vector<Natural>& q_list, unsigned max_threads) {
  std::vector<SweepRow> rows(q_list.size());
  unsigned threads = max_threads ? max_threads : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(q_list.size()));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < q_list.size(); i = next++) rows[i] = run_one(q_list[i]);
  };
  std::vector<std::jthread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  return rows;
}

}  // namespace sl12
