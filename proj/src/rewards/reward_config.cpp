#include "qjump/rewards/reward_config.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <vector>

namespace qjump::rewards {

namespace {

// Enumerates every tunable constant as (section, key, ref). Single source
// of truth for serialization and overrides.
template <typename F>
void visit_fields(RewardConfig& c, F&& f) {
  f("rewards.jip.stage1", "h_f", c.jip1.h_f);
  f("rewards.jip.stage1", "a_theta", c.jip1.g_theta.amplitude);
  f("rewards.jip.stage1", "b_theta", c.jip1.g_theta.decay);
  f("rewards.jip.stage1", "a_d", c.jip1.g_d.amplitude);
  f("rewards.jip.stage1", "b_d", c.jip1.g_d.decay);
  f("rewards.jip.stage1", "c_h", c.jip1.c_h);
  f("rewards.jip.stage1", "b", c.jip1.b);
  f("rewards.jip.stage1", "q", c.jip1.q);
  f("rewards.jip.stage1", "m", c.jip1.m);
  f("rewards.jip.stage1", "d_f", c.jip1.d_f);

  f("rewards.jf.stage1", "h_f", c.jf1.h_f);
  f("rewards.jf.stage1", "a_theta", c.jf1.g_theta.amplitude);
  f("rewards.jf.stage1", "b_theta", c.jf1.g_theta.decay);
  f("rewards.jf.stage1", "d_f", c.jf1.d_f);
  f("rewards.jf.stage1", "c_d", c.jf1.c_d);
  f("rewards.jf.stage1", "c_h", c.jf1.c_h);
  f("rewards.jf.stage1", "b", c.jf1.b);
  f("rewards.jf.stage1", "q", c.jf1.q);
  f("rewards.jf.stage1", "m", c.jf1.m);

  f("rewards.jip.stage2", "a_h", c.jip2.a_h);
  f("rewards.jip.stage2", "h_min", c.jip2.h_min);
  f("rewards.jip.stage2", "h_max", c.jip2.h_max);
  f("rewards.jip.stage2", "a_c", c.jip2.a_c);
  f("rewards.jip.stage2", "f_min", c.jip2.f_min);
  f("rewards.jip.stage2", "a_d", c.jip2.g_d.amplitude);
  f("rewards.jip.stage2", "b_d", c.jip2.g_d.decay);
  f("rewards.jip.stage2", "a_s", c.jip2.g_s.amplitude);
  f("rewards.jip.stage2", "b_s", c.jip2.g_s.decay);
  f("rewards.jip.stage2", "a_theta", c.jip2.g_theta.amplitude);
  f("rewards.jip.stage2", "b_theta", c.jip2.g_theta.decay);
  f("rewards.jip.stage2", "m", c.jip2.m);

  f("rewards.jf.stage2", "a_h", c.jf2.a_h);
  f("rewards.jf.stage2", "h_min", c.jf2.h_min);
  f("rewards.jf.stage2", "h_max", c.jf2.h_max);
  f("rewards.jf.stage2", "a_c", c.jf2.a_c);
  f("rewards.jf.stage2", "f_min", c.jf2.f_min);
  f("rewards.jf.stage2", "k_d", c.jf2.k_d);
  f("rewards.jf.stage2", "d_max", c.jf2.d_max);
  f("rewards.jf.stage2", "a_s", c.jf2.g_s.amplitude);
  f("rewards.jf.stage2", "b_s", c.jf2.g_s.decay);
  f("rewards.jf.stage2", "a_theta", c.jf2.g_theta.amplitude);
  f("rewards.jf.stage2", "b_theta", c.jf2.g_theta.decay);
  f("rewards.jf.stage2", "b", c.jf2.b);

  f("rewards.pronk.stage1", "h_f", c.pronk1.h_f);
  f("rewards.pronk.stage1", "d_f", c.pronk1.d_f);
  f("rewards.pronk.stage1", "w_h", c.pronk1.w_h);
  f("rewards.pronk.stage1", "w_d", c.pronk1.w_d);
  f("rewards.pronk.stage1", "a_theta", c.pronk1.g_theta.amplitude);
  f("rewards.pronk.stage1", "b_theta", c.pronk1.g_theta.decay);
  f("rewards.pronk.stage1", "w_t", c.pronk1.w_t);
  f("rewards.pronk.stage1", "w_s", c.pronk1.w_s);
  f("rewards.pronk.stage1", "k", c.pronk1.k);
  f("rewards.pronk.stage1", "w_avg", c.pronk1.w_avg);
  f("rewards.pronk.stage1", "w_max", c.pronk1.w_max);
  f("rewards.pronk.stage1", "w_c", c.pronk1.w_c);
  f("rewards.pronk.stage1", "b", c.pronk1.b);
  f("rewards.pronk.stage1", "perf_threshold", c.pronk1.perf_threshold);

  f("rewards.pronk.stage2", "a_h", c.pronk2.a_h);
  f("rewards.pronk.stage2", "h_min", c.pronk2.h_min);
  f("rewards.pronk.stage2", "h_max", c.pronk2.h_max);
  f("rewards.pronk.stage2", "a_c", c.pronk2.a_c);
  f("rewards.pronk.stage2", "f_min", c.pronk2.f_min);
  f("rewards.pronk.stage2", "a_d", c.pronk2.g_d.amplitude);
  f("rewards.pronk.stage2", "b_d", c.pronk2.g_d.decay);
  f("rewards.pronk.stage2", "a_s", c.pronk2.g_s.amplitude);
  f("rewards.pronk.stage2", "b_s", c.pronk2.g_s.decay);
  f("rewards.pronk.stage2", "a_theta", c.pronk2.g_theta.amplitude);
  f("rewards.pronk.stage2", "b_theta", c.pronk2.g_theta.decay);
  f("rewards.pronk.stage2", "m", c.pronk2.m);
  f("rewards.pronk.stage2", "a_p", c.pronk2.g_p.amplitude);
  f("rewards.pronk.stage2", "b_p", c.pronk2.g_p.decay);
  f("rewards.pronk.stage2", "w_j", c.pronk2.w_j);
  f("rewards.pronk.stage2", "l_j", c.pronk2.l_j);
  f("rewards.pronk.stage2", "perf_threshold", c.pronk2.perf_threshold);

  f("rewards.backflip.stage1", "w_h", c.flip1.w_h);
  f("rewards.backflip.stage1", "w_theta", c.flip1.w_theta);
  f("rewards.backflip.stage1", "w_htheta", c.flip1.w_htheta);
  f("rewards.backflip.stage1", "b", c.flip1.b);

  f("rewards.backflip.stage2", "a_h", c.flip2.a_h);
  f("rewards.backflip.stage2", "h_min", c.flip2.h_min);
  f("rewards.backflip.stage2", "h_max", c.flip2.h_max);
  f("rewards.backflip.stage2", "a_c", c.flip2.a_c);
  f("rewards.backflip.stage2", "f_min", c.flip2.f_min);
  f("rewards.backflip.stage2", "a_s", c.flip2.g_s.amplitude);
  f("rewards.backflip.stage2", "b_s", c.flip2.g_s.decay);
  f("rewards.backflip.stage2", "a_theta", c.flip2.g_theta.amplitude);
  f("rewards.backflip.stage2", "b_theta", c.flip2.g_theta.decay);
  f("rewards.backflip.stage2", "w_bonus", c.flip2.w_bonus);

  f("rewards.imitation", "w_a", c.imitation.w_a);
  f("rewards.imitation", "w_b", c.imitation.w_b);
}

}  // namespace

double RewardConfig::height_cap(Task task) const {
  switch (task) {
    case Task::kJumpInPlace: return jip1.h_f;
    case Task::kJumpForward: return jf1.h_f;
    case Task::kPronk: return pronk1.h_f;
    case Task::kBackflip: return 1.0;  // flip stage 1 uses raw height
  }
  return 1.0;
}

double RewardConfig::distance_cap(Task task) const {
  switch (task) {
    case Task::kJumpInPlace: return jip1.d_f;
    case Task::kJumpForward: return jf1.d_f;
    case Task::kPronk: return pronk1.d_f;
    case Task::kBackflip: return 1.0;
  }
  return 1.0;
}

double RewardConfig::jump_perf_threshold(Task task) const {
  return task == Task::kPronk ? pronk1.perf_threshold : 0.0;
}

double RewardConfig::perf_w_h(Task task) const {
  return task == Task::kPronk ? pronk1.w_h : 1.0;
}

double RewardConfig::perf_w_d(Task task) const {
  return task == Task::kPronk ? pronk1.w_d : 0.0;
}

void RewardConfig::validate() const {
  RewardConfig copy = *this;
  visit_fields(copy, [](const char* section, const char* key, double& v) {
    if (!std::isfinite(v))
      throw ConfigError(std::string("reward config: non-finite value for ") +
                        section + "." + key);
  });
  for (const Kernel* k : {&jip1.g_theta, &jip1.g_d, &jf1.g_theta, &jip2.g_d,
                          &jip2.g_s, &jip2.g_theta, &jf2.g_s, &jf2.g_theta,
                          &pronk1.g_theta, &pronk2.g_d, &pronk2.g_s,
                          &pronk2.g_theta, &pronk2.g_p, &flip2.g_s,
                          &flip2.g_theta}) {
    k->validate();
  }
  for (double cap : {jip1.h_f, jip1.d_f, jf1.h_f, jf1.d_f, pronk1.h_f,
                     pronk1.d_f, jf2.d_max})
    if (!(cap > 0.0)) throw ConfigError("reward config: normalization caps must be positive");
}

std::string serialize_reward_config(const RewardConfig& cfg) {
  RewardConfig copy = cfg;
  std::ostringstream out;
  std::string current_section;
  char buf[64];
  visit_fields(copy, [&](const char* section, const char* key, double& v) {
    if (current_section != section) {
      if (!current_section.empty()) out << "\n";
      current_section = section;
      out << "[" << section << "]\n";
    }
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    out << key << " = " << buf << "\n";
  });
  return out.str();
}

bool apply_reward_override(RewardConfig& cfg, const std::string& section,
                           const std::string& key, double value) {
  bool found = false;
  visit_fields(cfg, [&](const char* s, const char* k, double& v) {
    if (!found && section == s && key == k) {
      v = value;
      found = true;
    }
  });
  return found;
}

}  // namespace qjump::rewards
