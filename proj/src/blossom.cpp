#include "fairfront/blossom.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <stdexcept>

namespace fairfront::detail {

namespace {

// Classic O(V^3) weighted blossom machinery. Vertices are 1-based internally,
// 0 is the null vertex; ids above n are shrunk blossoms. st[] maps a vertex to
// its top-level blossom, S[] is the BFS parity (-1 unvisited, 0 even, 1 odd),
// lab[] the dual. w/eu/ev mirror the usual edge-struct adjacency matrix.
class Matcher {
 public:
  explicit Matcher(int n) : n_(n), n_x_(n) {
    int cap = 2 * n + 2;
    w_.assign(cap, std::vector<long long>(cap, 0));
    eu_.assign(cap, std::vector<int>(cap, 0));
    ev_.assign(cap, std::vector<int>(cap, 0));
    for (int u = 0; u < cap; ++u) {
      for (int v = 0; v < cap; ++v) {
        eu_[u][v] = u;
        ev_[u][v] = v;
      }
    }
    lab_.assign(cap, 0);
    match_.assign(cap, 0);
    slack_.assign(cap, 0);
    st_.assign(cap, 0);
    pa_.assign(cap, 0);
    s_.assign(cap, -1);
    vis_.assign(cap, 0);
    flower_.assign(cap, {});
    flower_from_.assign(cap, std::vector<int>(n + 1, 0));
  }

  void add_edge(int u, int v, long long w) {
    w_[u][v] = w_[v][u] = w;
  }

  std::vector<int> solve() {
    for (int u = 0; u <= n_; ++u) {
      st_[u] = u;
      flower_[u].clear();
    }
    long long w_max = 0;
    for (int u = 1; u <= n_; ++u) {
      for (int v = 1; v <= n_; ++v) {
        flower_from_[u][v] = (u == v ? u : 0);
        w_max = std::max(w_max, w_[u][v]);
      }
    }
    for (int u = 1; u <= n_; ++u) lab_[u] = w_max;
    while (phase()) {
    }
    std::vector<int> mate(n_, -1);
    for (int u = 1; u <= n_; ++u) {
      if (match_[u]) mate[u - 1] = match_[u] - 1;
    }
    return mate;
  }

 private:
  long long e_delta(int u, int v) const {
    return lab_[eu_[u][v]] + lab_[ev_[u][v]] - w_[u][v] * 2;
  }

  void update_slack(int u, int x) {
    if (!slack_[x] || e_delta(u, x) < e_delta(slack_[x], x)) slack_[x] = u;
  }

  void set_slack(int x) {
    slack_[x] = 0;
    for (int u = 1; u <= n_; ++u) {
      if (w_[u][x] > 0 && st_[u] != x && s_[st_[u]] == 0) update_slack(u, x);
    }
  }

  void q_push(int x) {
    if (x <= n_) {
      q_.push_back(x);
    } else {
      for (int t : flower_[x]) q_push(t);
    }
  }

  void set_st(int x, int b) {
    st_[x] = b;
    if (x > n_) {
      for (int t : flower_[x]) set_st(t, b);
    }
  }

  int get_pr(int b, int xr) {
    int pr = static_cast<int>(std::find(flower_[b].begin(), flower_[b].end(), xr) -
                              flower_[b].begin());
    if (pr % 2 == 1) {
      std::reverse(flower_[b].begin() + 1, flower_[b].end());
      return static_cast<int>(flower_[b].size()) - pr;
    }
    return pr;
  }

  void set_match(int u, int v) {
    match_[u] = ev_[u][v];
    if (u <= n_) return;
    int xr = flower_from_[u][eu_[u][v]];
    int pr = get_pr(u, xr);
    for (int i = 0; i < pr; ++i) {
      set_match(flower_[u][i], flower_[u][i ^ 1]);
    }
    set_match(xr, v);
    std::rotate(flower_[u].begin(), flower_[u].begin() + pr, flower_[u].end());
  }

  void augment(int u, int v) {
    while (true) {
      int xnv = st_[match_[u]];
      set_match(u, v);
      if (!xnv) return;
      set_match(xnv, st_[pa_[xnv]]);
      u = st_[pa_[xnv]];
      v = xnv;
    }
  }

  int get_lca(int u, int v) {
    ++timer_;
    while (u || v) {
      if (u) {
        if (vis_[u] == timer_) return u;
        vis_[u] = timer_;
        u = st_[match_[u]];
        if (u) u = st_[pa_[u]];
      }
      std::swap(u, v);
    }
    return 0;
  }

  void add_blossom(int u, int lca, int v) {
    int b = n_ + 1;
    while (b <= n_x_ && st_[b]) ++b;
    if (b > n_x_) ++n_x_;
    lab_[b] = 0;
    s_[b] = 0;
    match_[b] = match_[lca];
    flower_[b].clear();
    flower_[b].push_back(lca);
    for (int x = u, y; x != lca; x = st_[pa_[y]]) {
      flower_[b].push_back(x);
      flower_[b].push_back(y = st_[match_[x]]);
      q_push(y);
    }
    std::reverse(flower_[b].begin() + 1, flower_[b].end());
    for (int x = v, y; x != lca; x = st_[pa_[y]]) {
      flower_[b].push_back(x);
      flower_[b].push_back(y = st_[match_[x]]);
      q_push(y);
    }
    set_st(b, b);
    for (int x = 1; x <= n_x_; ++x) w_[b][x] = w_[x][b] = 0;
    for (int x = 1; x <= n_; ++x) flower_from_[b][x] = 0;
    for (int xs : flower_[b]) {
      for (int x = 1; x <= n_x_; ++x) {
        // only real edges may represent the blossom (copying a non-edge could
        // route an augmenting path through a pair that cannot be matched)
        if (w_[xs][x] > 0 && (w_[b][x] == 0 || e_delta(xs, x) < e_delta(b, x))) {
          w_[b][x] = w_[xs][x];
          w_[x][b] = w_[x][xs];
          eu_[b][x] = eu_[xs][x];
          ev_[b][x] = ev_[xs][x];
          eu_[x][b] = eu_[x][xs];
          ev_[x][b] = ev_[x][xs];
        }
      }
      for (int x = 1; x <= n_; ++x) {
        if (flower_from_[xs][x]) flower_from_[b][x] = xs;
      }
    }
    set_slack(b);
  }

  void expand_blossom(int b) {
    for (int t : flower_[b]) set_st(t, t);
    int xr = flower_from_[b][eu_[b][pa_[b]]];
    int pr = get_pr(b, xr);
    for (int i = 0; i < pr; i += 2) {
      int xs = flower_[b][i];
      int xns = flower_[b][i + 1];
      pa_[xs] = eu_[xns][xs];
      s_[xs] = 1;
      s_[xns] = 0;
      slack_[xs] = 0;
      set_slack(xns);
      q_push(xns);
    }
    s_[xr] = 1;
    pa_[xr] = pa_[b];
    for (std::size_t i = pr + 1; i < flower_[b].size(); ++i) {
      int xs = flower_[b][i];
      s_[xs] = -1;
      set_slack(xs);
    }
    st_[b] = 0;
  }

  bool on_found_edge(int eu, int ev) {
    int u = st_[eu];
    int v = st_[ev];
    if (s_[v] == -1) {
      pa_[v] = eu;
      s_[v] = 1;
      int nu = st_[match_[v]];
      slack_[v] = slack_[nu] = 0;
      s_[nu] = 0;
      q_push(nu);
    } else if (s_[v] == 0) {
      int lca = get_lca(u, v);
      if (!lca) {
        augment(u, v);
        augment(v, u);
        return true;
      }
      add_blossom(u, lca, v);
    }
    return false;
  }

  bool phase() {
    std::fill(s_.begin() + 1, s_.begin() + n_x_ + 1, -1);
    std::fill(slack_.begin() + 1, slack_.begin() + n_x_ + 1, 0);
    q_.clear();
    for (int x = 1; x <= n_x_; ++x) {
      if (st_[x] == x && !match_[x]) {
        pa_[x] = 0;
        s_[x] = 0;
        q_push(x);
      }
    }
    if (q_.empty()) return false;

    while (true) {
      while (!q_.empty()) {
        int u = q_.front();
        q_.pop_front();
        if (s_[st_[u]] != 0) continue;
        for (int v = 1; v <= n_; ++v) {
          if (w_[u][v] > 0 && st_[u] != st_[v]) {
            if (e_delta(u, v) == 0) {
              if (on_found_edge(u, v)) return true;
            } else {
              update_slack(u, st_[v]);
            }
          }
        }
      }
      long long d = std::numeric_limits<long long>::max();
      for (int b = n_ + 1; b <= n_x_; ++b) {
        if (st_[b] == b && s_[b] == 1) d = std::min(d, lab_[b] / 2);
      }
      for (int x = 1; x <= n_x_; ++x) {
        if (st_[x] == x && slack_[x]) {
          if (s_[x] == -1) {
            d = std::min(d, e_delta(slack_[x], x));
          } else if (s_[x] == 0) {
            d = std::min(d, e_delta(slack_[x], x) / 2);
          }
        }
      }
      if (d == std::numeric_limits<long long>::max()) return false;
      for (int u = 1; u <= n_; ++u) {
        if (s_[st_[u]] == 0) {
          if (lab_[u] <= d) return false;  // a free even vertex hit zero
          lab_[u] -= d;
        } else if (s_[st_[u]] == 1) {
          lab_[u] += d;
        }
      }
      for (int b = n_ + 1; b <= n_x_; ++b) {
        if (st_[b] == b && s_[b] >= 0) {
          lab_[b] += (s_[b] == 0 ? 2 * d : -2 * d);
        }
      }
      q_.clear();
      for (int x = 1; x <= n_x_; ++x) {
        // a slack edge that just went tight either extends the tree through x
        // or closes an augmenting path / blossom
        if (st_[x] == x && slack_[x] && st_[slack_[x]] != x &&
            e_delta(slack_[x], x) == 0) {
          if (on_found_edge(eu_[slack_[x]][x], ev_[slack_[x]][x])) return true;
        }
      }
      for (int b = n_ + 1; b <= n_x_; ++b) {
        if (st_[b] == b && s_[b] == 1 && lab_[b] == 0) expand_blossom(b);
      }
    }
  }

  int n_;
  int n_x_;
  int timer_ = 0;
  std::vector<std::vector<long long>> w_;
  std::vector<std::vector<int>> eu_, ev_;
  std::vector<long long> lab_;
  std::vector<int> match_, slack_, st_, pa_, s_, vis_;
  std::vector<std::vector<int>> flower_, flower_from_;
  std::deque<int> q_;
};

}  // namespace

std::vector<int> max_weight_matching(
    int n, const std::vector<std::array<long long, 3>>& edges) {
  if (n == 0) return {};
  Matcher m(n);
  for (const auto& e : edges) {
    int u = static_cast<int>(e[0]);
    int v = static_cast<int>(e[1]);
    long long w = e[2];
    if (u < 0 || v < 0 || u >= n || v >= n || u == v) {
      throw std::invalid_argument("bad edge");
    }
    if (w <= 0) throw std::invalid_argument("weights must be positive");
    m.add_edge(u + 1, v + 1, w);
  }
  return m.solve();
}

}  // namespace fairfront::detail
