#pragma once

#include <utility>
#include <vector>

#include "setcover/common.hpp"

namespace setcover {

/// Cardinality buckets over live sets, ordered by decreasing cardinality:
/// a doubly linked list of (cardinality, bucket) nodes plus per-set back
/// pointers, so the maximum-cardinality set is read off the head and a
/// decrement moves a set one bucket down in O(1). Cardinality-0 sets leave
/// the structure.
class SortList {
  public:
    explicit SortList(int num_sets = 0) { reset(num_sets); }

    void reset(int num_sets) {
        node_of_.assign(static_cast<std::size_t>(num_sets), -1);
        pos_of_.assign(static_cast<std::size_t>(num_sets), -1);
        nodes_.clear();
        head_ = -1;
        size_ = 0;
    }

    /// Linear-time grouping initialization from per-set cardinalities
    /// (index = set id; cardinality 0 entries are skipped).
    void init(const std::vector<int>& cardinality) {
        reset(static_cast<int>(cardinality.size()));
        int max_card = 0;
        for (int c : cardinality) max_card = c > max_card ? c : max_card;
        if (max_card == 0) return;
        std::vector<std::vector<int>> by_card(static_cast<std::size_t>(max_card) + 1);
        for (int s = 0; s < static_cast<int>(cardinality.size()); ++s)
            if (cardinality[static_cast<std::size_t>(s)] > 0)
                by_card[static_cast<std::size_t>(cardinality[static_cast<std::size_t>(s)])]
                    .push_back(s);
        int prev = -1;
        for (int c = max_card; c >= 1; --c) {
            auto& bucket = by_card[static_cast<std::size_t>(c)];
            if (bucket.empty()) continue;
            const int node = new_node(c, prev, -1);
            if (prev >= 0)
                nodes_[static_cast<std::size_t>(prev)].next = node;
            else
                head_ = node;
            auto& sets = nodes_[static_cast<std::size_t>(node)].sets;
            sets = std::move(bucket);
            for (int i = 0; i < static_cast<int>(sets.size()); ++i) {
                node_of_[static_cast<std::size_t>(sets[static_cast<std::size_t>(i)])] = node;
                pos_of_[static_cast<std::size_t>(sets[static_cast<std::size_t>(i)])] = i;
            }
            size_ += static_cast<int>(sets.size());
            prev = node;
        }
    }

    bool empty() const { return size_ == 0; }
    int size() const { return size_; }
    bool contains(int set) const { return node_of_[static_cast<std::size_t>(set)] >= 0; }

    int cardinality_of(int set) const {
        const int node = node_of_[static_cast<std::size_t>(set)];
        if (node < 0) throw contract_error("set not present in SORT");
        return nodes_[static_cast<std::size_t>(node)].card;
    }

    int head_cardinality() const {
        if (empty()) throw contract_error("SORT is empty");
        return nodes_[static_cast<std::size_t>(head_)].card;
    }

    /// First set of the head bucket; ties among maximum-cardinality sets are
    /// broken by bucket insertion order.
    int head_set() const {
        if (empty()) throw contract_error("SORT is empty");
        return nodes_[static_cast<std::size_t>(head_)].sets.front();
    }

    /// Inserts a set with the given cardinality (>= 1); walks from the head
    /// to find or create its bucket.
    void insert(int set, int cardinality) {
        if (cardinality < 1) throw contract_error("cardinality must be >= 1");
        if (contains(set)) throw contract_error("set already present in SORT");
        int prev = -1, cur = head_;
        while (cur >= 0 && nodes_[static_cast<std::size_t>(cur)].card > cardinality) {
            prev = cur;
            cur = nodes_[static_cast<std::size_t>(cur)].next;
        }
        int node;
        if (cur >= 0 && nodes_[static_cast<std::size_t>(cur)].card == cardinality) {
            node = cur;
        } else {
            node = new_node(cardinality, prev, cur);
            link(node, prev, cur);
        }
        place(set, node);
        ++size_;
    }

    /// Moves a set from its bucket (i, L_i) to (i-1, L_{i-1}), creating or
    /// removing entries as needed; at cardinality 0 the set is dropped.
    void decrement(int set) {
        const int node = node_of_[static_cast<std::size_t>(set)];
        if (node < 0) throw contract_error("decrement of set absent from SORT");
        const int card = nodes_[static_cast<std::size_t>(node)].card;
        detach(set, node);
        if (card - 1 >= 1) {
            const int next = nodes_[static_cast<std::size_t>(node)].next;
            int target;
            if (next >= 0 && nodes_[static_cast<std::size_t>(next)].card == card - 1) {
                target = next;
            } else {
                target = new_node(card - 1, node, next);
                link(target, node, next);
            }
            place(set, target);
        } else {
            --size_;
        }
        if (nodes_[static_cast<std::size_t>(node)].sets.empty()) unlink(node);
    }

    /// Removes a set from the structure entirely (it joined the cover).
    void remove(int set) {
        const int node = node_of_[static_cast<std::size_t>(set)];
        if (node < 0) throw contract_error("remove of set absent from SORT");
        detach(set, node);
        --size_;
        if (nodes_[static_cast<std::size_t>(node)].sets.empty()) unlink(node);
    }

    /// Snapshot of the (cardinality, bucket) pairs in list order, for tests.
    std::vector<std::pair<int, std::vector<int>>> entries() const {
        std::vector<std::pair<int, std::vector<int>>> out;
        for (int cur = head_; cur >= 0; cur = nodes_[static_cast<std::size_t>(cur)].next)
            out.emplace_back(nodes_[static_cast<std::size_t>(cur)].card,
                             nodes_[static_cast<std::size_t>(cur)].sets);
        return out;
    }

  private:
    struct Node {
        int card = 0;
        std::vector<int> sets;
        int prev = -1;
        int next = -1;
    };

    int new_node(int card, int prev, int next) {
        int idx;
        if (!free_nodes_.empty()) {
            idx = free_nodes_.back();
            free_nodes_.pop_back();
            nodes_[static_cast<std::size_t>(idx)] = Node{};
        } else {
            idx = static_cast<int>(nodes_.size());
            nodes_.emplace_back();
        }
        auto& nd = nodes_[static_cast<std::size_t>(idx)];
        nd.card = card;
        nd.prev = prev;
        nd.next = next;
        return idx;
    }

    void link(int node, int prev, int next) {
        if (prev >= 0)
            nodes_[static_cast<std::size_t>(prev)].next = node;
        else
            head_ = node;
        if (next >= 0) nodes_[static_cast<std::size_t>(next)].prev = node;
    }

    void unlink(int node) {
        const auto& nd = nodes_[static_cast<std::size_t>(node)];
        if (nd.prev >= 0)
            nodes_[static_cast<std::size_t>(nd.prev)].next = nd.next;
        else
            head_ = nd.next;
        if (nd.next >= 0) nodes_[static_cast<std::size_t>(nd.next)].prev = nd.prev;
        free_nodes_.push_back(node);
    }

    void place(int set, int node) {
        auto& bucket = nodes_[static_cast<std::size_t>(node)].sets;
        node_of_[static_cast<std::size_t>(set)] = node;
        pos_of_[static_cast<std::size_t>(set)] = static_cast<int>(bucket.size());
        bucket.push_back(set);
    }

    void detach(int set, int node) {
        auto& bucket = nodes_[static_cast<std::size_t>(node)].sets;
        const int pos = pos_of_[static_cast<std::size_t>(set)];
        const int last = bucket.back();
        bucket[static_cast<std::size_t>(pos)] = last;
        pos_of_[static_cast<std::size_t>(last)] = pos;
        bucket.pop_back();
        node_of_[static_cast<std::size_t>(set)] = -1;
        pos_of_[static_cast<std::size_t>(set)] = -1;
    }

    std::vector<Node> nodes_;
    std::vector<int> free_nodes_;
    std::vector<int> node_of_;
    std::vector<int> pos_of_;
    int head_ = -1;
    int size_ = 0;
};

}  // namespace setcover
