#include "placidus/dot.hpp"

#include <sstream>

namespace placidus
{

namespace
{

std::string escape( const std::string& text )
{
    std::string out;
    for ( char c : text )
    {
        if ( c == '"' || c == '\\' )
            out += '\\';
        if ( c == '\n' )
        {
            out += "\\n";
            continue;
        }
        out += c;
    }
    return out;
}

const char* colour( node_status status )
{
    switch ( status )
    {
    case node_status::certified:
    case node_status::evidence_backed: return "darkgreen";
    case node_status::assumed: return "darkorange";
    case node_status::broken: return "red";
    case node_status::undeveloped: return "gray50";
    }
    return "black";
}

std::string goal_label( const Goal& goal )
{
    return goal.text.empty() ? goal.key() : goal.text;
}

struct emitter
{
    std::ostringstream out;

    void node( const std::string& id, const std::string& label, bool evidence, bool undeveloped,
               std::optional< node_status > status )
    {
        out << "  \"" << escape( id ) << "\" [label=\"" << escape( id + ": " + label ) << "\"";
        out << ", shape=" << ( evidence ? "ellipse" : "box" );
        if ( undeveloped )
            out << ", style=dashed";
        if ( status )
            out << ", color=" << colour( *status ) << ", penwidth=2";
        out << "];\n";
    }

    void edge( const std::string& from, const std::string& to )
    {
        out << "  \"" << escape( from ) << "\" -> \"" << escape( to ) << "\";\n";
    }

    std::string finish()
    {
        out << "}\n";
        return out.str();
    }
};

void header( emitter& e, const char* name )
{
    e.out << "digraph " << name << " {\n";
    e.out << "  rankdir=TB;\n";
    e.out << "  node [fontname=\"Helvetica\", fontsize=10];\n";
}

void walk( emitter& e, const GsnNode& node, const DeductiveReport* report )
{
    std::optional< node_status > status;
    if ( report != nullptr )
        if ( const auto* entry = report->find( node.id ) )
            status = entry->status;
    e.node( node.id, goal_label( *node.goal ), node.is_evidence(), node.is_strategy() && node.children.empty(),
            status );
    for ( const auto& child : node.children )
    {
        if ( child.is_nil() )
            continue;
        e.edge( node.id, child.id );
        walk( e, child, report );
    }
}

void walk( emitter& e, const VGsnNode& node, const VDeductiveReport* report )
{
    std::optional< node_status > status;
    if ( report != nullptr )
        if ( const auto* entry = report->find( node.id ) )
            status = entry->status;
    e.node( node.id, goal_label( node.goal.body ) + " [" + node.goal.pc.to_string() + "]", node.is_evidence(),
            node.is_strategy() && node.children.empty(), status );
    for ( const auto& child : node.children )
    {
        e.edge( node.id, child.id );
        walk( e, child, report );
    }
}

} // namespace

std::string render_dot( const GsnNode& root, const DeductiveReport* report )
{
    emitter e;
    header( e, "ac" );
    if ( !root.is_nil() )
        walk( e, root, report );
    return e.finish();
}

std::string render_dot( const PlAc& ac, const VDeductiveReport* report )
{
    emitter e;
    header( e, "plac" );
    walk( e, ac.root, report );
    return e.finish();
}

} // namespace placidus
