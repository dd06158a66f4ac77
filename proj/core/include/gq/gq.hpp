#ifndef GQ_GQ_HPP_
#define GQ_GQ_HPP_

#include "gq/census.hpp"
#include "gq/error.hpp"
#include "gq/galois.hpp"
#include "gq/monoid.hpp"
#include "gq/op_table.hpp"
#include "gq/ops.hpp"
#include "gq/prefix_trie.hpp"
#include "gq/relation.hpp"
#include "gq/relations.hpp"
#include "gq/tensor.hpp"
#include "gq/text_format.hpp"
#include "gq/universe.hpp"

#endif  // GQ_GQ_HPP_
