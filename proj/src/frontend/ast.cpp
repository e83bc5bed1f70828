#include <smellscan/frontend/ast.hpp>

#include <utility>

namespace smellscan::ast {

std::string Modifiers::to_string() const
{
    static constexpr std::pair<Modifier, const char*> order[] = {
        {Modifier::Public, "public"},       {Modifier::Protected, "protected"},
        {Modifier::Private, "private"},     {Modifier::Abstract, "abstract"},
        {Modifier::Static, "static"},       {Modifier::Final, "final"},
        {Modifier::Sealed, "sealed"},       {Modifier::NonSealed, "non-sealed"},
        {Modifier::Default, "default"},     {Modifier::Transient, "transient"},
        {Modifier::Volatile, "volatile"},   {Modifier::Synchronized, "synchronized"},
        {Modifier::Native, "native"},       {Modifier::Strictfp, "strictfp"},
    };
    std::string out;
    for (auto [mod, word] : order) {
        if (has(mod)) {
            if (!out.empty()) out += ' ';
            out += word;
        }
    }
    return out;
}

} // namespace smellscan::ast
