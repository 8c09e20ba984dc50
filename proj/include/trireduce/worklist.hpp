#pragma once

// Doubly-linked edge worklist threaded through the mesh edge records. An
// edge belongs to at most one list at a time; the tag in its record says
// which, so membership tests and front/rear moves are O(1).

#include <cstddef>

#include "trireduce/errors.hpp"
#include "trireduce/mesh.hpp"

namespace trireduce {

class EdgeWorklist {
  public:
    EdgeWorklist(Mesh& mesh, WorklistTag tag) : mesh_(&mesh), tag_(tag) {}

    bool empty() const { return size_ == 0; }
    std::size_t size() const { return size_; }
    EdgeId front() const { return head_; }
    bool contains(EdgeId e) const { return mesh_->edge(e).list_tag == tag_; }

    void push_front(EdgeId e) {
        claim(e);
        EdgeRecord& r = mesh_->edge(e);
        r.list_prev = EdgeId{};
        r.list_next = head_;
        if (head_.valid()) mesh_->edge(head_).list_prev = e;
        head_ = e;
        if (!tail_.valid()) tail_ = e;
        ++size_;
    }

    void push_back(EdgeId e) {
        claim(e);
        EdgeRecord& r = mesh_->edge(e);
        r.list_next = EdgeId{};
        r.list_prev = tail_;
        if (tail_.valid()) mesh_->edge(tail_).list_next = e;
        tail_ = e;
        if (!head_.valid()) head_ = e;
        ++size_;
    }

    EdgeId pop_front() {
        const EdgeId e = head_;
        remove(e);
        return e;
    }

    void remove(EdgeId e) {
        if (!contains(e)) throw InvariantViolation("worklist: removing edge not in list");
        EdgeRecord& r = mesh_->edge(e);
        if (r.list_prev.valid())
            mesh_->edge(r.list_prev).list_next = r.list_next;
        else
            head_ = r.list_next;
        if (r.list_next.valid())
            mesh_->edge(r.list_next).list_prev = r.list_prev;
        else
            tail_ = r.list_prev;
        r.list_tag = WorklistTag::none;
        r.list_prev = r.list_next = EdgeId{};
        --size_;
    }

    void move_to_front(EdgeId e) {
        remove(e);
        push_front(e);
    }

    void move_to_back(EdgeId e) {
        remove(e);
        push_back(e);
    }

    void clear() {
        while (head_.valid()) {
            EdgeId e = head_;
            head_ = mesh_->edge(e).list_next;
            EdgeRecord& r = mesh_->edge(e);
            r.list_tag = WorklistTag::none;
            r.list_prev = r.list_next = EdgeId{};
        }
        tail_ = EdgeId{};
        size_ = 0;
    }

    template <class Fn>
    void for_each(Fn&& fn) const {
        for (EdgeId e = head_; e.valid(); e = mesh_->edge(e).list_next) fn(e);
    }

  private:
    void claim(EdgeId e) {
        EdgeRecord& r = mesh_->edge(e);
        if (r.list_tag != WorklistTag::none)
            throw InvariantViolation("worklist: edge already in a list");
        r.list_tag = tag_;
    }

    Mesh* mesh_;
    WorklistTag tag_;
    EdgeId head_, tail_;
    std::size_t size_ = 0;
};

}  // namespace trireduce
